// sweep.hpp — Named presets, parameter sweeps and CSV/manifest output

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosc/dissipators.hpp"
#include "cosc/langevin.hpp"
#include "cosc/model.hpp"

namespace cosc {

enum class Method { LocalME, GlobalME, Langevin, Gibbs };
enum class Observable { occupation1, occupation2, mutual_information };

// equal:          T1 = T2 = T_ref (deltaT must be 0)
// fixed_T2:       T2 = T_ref, T1 = T2 - deltaT
// sign_dependent: deltaT >= 0: T1 = T_ref, T2 = T1 + deltaT; deltaT < 0: T2 = T_ref, T1 = T2 - deltaT
enum class TemperatureAnchor { equal, fixed_T2, sign_dependent };

const char* to_string(Method m);
const char* to_string(Observable o);
const char* to_string(TemperatureAnchor a);
Method parse_method(const std::string& s);
Observable parse_observable(const std::string& s);
TemperatureAnchor parse_anchor(const std::string& s);

struct BaseParams {
    double omega1{5.0};
    double omega2{2.0};
    double gamma1{1.5e-4};
    double gamma2{1.5e-4};
    double T_ref{98.0};
};

struct SweepConfig {
    std::string name{"sweep"};
    BaseParams base;
    std::vector<CouplingKind> kind;
    std::vector<Method> methods;
    std::vector<double> lambda_grid;    // fractions of lambda_c, each in [0, 1)
    std::vector<double> deltaT_list;    // deltaT = T2 - T1
    TemperatureAnchor temperature_anchor{TemperatureAnchor::equal};
    std::vector<Observable> observables;
    QuadratureConfig quadrature;
    std::string output_path{"."};
    RateConvention rate_convention{RateConvention::Bose};
    int workers{1};
    bool legend_unverified{false};    // deltaT list is a convention, not a verified value

    void validate() const;    // throws ConfigInvalid
};

struct SweepRow {
    CouplingKind kind{CouplingKind::PositionPosition};
    Method method{Method::LocalME};
    double lambda_frac{0.0};
    double lambda{0.0};
    double T1{0.0};
    double T2{0.0};
    double deltaT{0.0};
    Observable observable{Observable::occupation1};
    std::optional<double> value;
    std::optional<double> ratio_to_langevin;
    std::string status{"ok"};    // "ok" or an error code name
    std::optional<double> diag_residual;
    std::optional<double> diag_quad_error;
};

// 60 points on [0, 0.95] plus 0.955 ... 0.99.
std::vector<double> default_lambda_grid();
std::vector<std::string> preset_ids();
SweepConfig preset(const std::string& id);    // throws UnknownPreset

// (T1, T2) for a given deltaT under the anchor rule.
std::pair<double, double> anchor_temperatures(TemperatureAnchor anchor, double T_ref, double deltaT);

// Rows ordered by (kind, method, deltaT, lambda, observable); grid-point failures become error rows.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

std::string format_csv(const std::vector<SweepRow>& rows);
std::string format_manifest(const SweepConfig& config, const std::vector<SweepRow>& rows);
std::string config_to_text(const SweepConfig& config);
SweepConfig config_from_text(const std::string& text);    // throws ConfigInvalid
SweepConfig load_config(const std::string& path);

// Writes <name>_<kind>.csv per kind and <name>.manifest into config.output_path.
std::vector<std::string> write_output(const std::vector<SweepRow>& rows, const SweepConfig& config);

std::string version();

} // namespace cosc
