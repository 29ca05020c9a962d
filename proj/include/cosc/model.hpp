// model.hpp — Parameters and exact diagonalization of two coupled oscillators

#pragma once

#include <Eigen/Dense>

namespace cosc {

enum class CouplingKind { PositionPosition, RotatingWave };

const char* to_string(CouplingKind kind);    // "pp" / "rw"
CouplingKind parse_coupling_kind(const char* text);

// Unvalidated parameter record.
struct RawParams {
    double omega1{5.0};
    double omega2{2.0};
    double lambda{0.0};
    CouplingKind kind{CouplingKind::PositionPosition};
    double gamma1{1.5e-4};
    double gamma2{1.5e-4};
    double T1{98.0};
    double T2{98.0};
};

// H = w1 a1'a1 + w2 a2'a2 + lambda (a1 a2' + a1' a2) + kappa (a1 a2 + a1' a2'),
// kappa = lambda for pp, 0 for rw. Immutable once validated.
class ModelParams {
public:
    static ModelParams validate(const RawParams& raw);

    double omega1() const { return raw_.omega1; }
    double omega2() const { return raw_.omega2; }
    double lambda() const { return raw_.lambda; }
    double kappa() const { return raw_.kind == CouplingKind::PositionPosition ? raw_.lambda : 0.0; }
    CouplingKind kind() const { return raw_.kind; }
    double gamma1() const { return raw_.gamma1; }
    double gamma2() const { return raw_.gamma2; }
    double T1() const { return raw_.T1; }
    double T2() const { return raw_.T2; }
    double beta1() const { return 1.0 / raw_.T1; }
    double beta2() const { return 1.0 / raw_.T2; }
    double lambda_c() const;
    const RawParams& raw() const { return raw_; }

    ModelParams with_lambda(double lambda) const;
    ModelParams with_temperatures(double T1, double T2) const;

private:
    explicit ModelParams(const RawParams& raw) : raw_(raw) {}
    RawParams raw_;
};

double critical_coupling(CouplingKind kind, double omega1, double omega2);

struct NormalModes {
    double omega_plus{0.0};
    double omega_minus{0.0};
    CouplingKind kind{CouplingKind::PositionPosition};
};

NormalModes normal_mode_frequencies(const ModelParams& model);

// d+ = c a1 + s a2, d- = c a2 - s a1.
struct RwRotation {
    double c{1.0};
    double s{0.0};
};

RwRotation rw_rotation(const ModelParams& model);

// (a1, a2, a1', a2') = S (c+, c-, c+', c-'), S = [[A, B], [B, A]], W = S^-1.
struct BogoliubovTransform {
    Eigen::Matrix4d S;
    Eigen::Matrix4d W;
};

double pp_mixing_angle(const ModelParams& model);
BogoliubovTransform pp_bogoliubov(const ModelParams& model);

// rw rotation embedded as a 4x4 transform, or the pp Bogoliubov transform.
BogoliubovTransform mode_transform(const ModelParams& model);

double bose_occupation(double omega, double beta);

} // namespace cosc
