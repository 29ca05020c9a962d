// cosc.cpp — Command-line runner for named presets, config sweeps and oracle validation

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cosc/errors.hpp"
#include "cosc/sweep.hpp"
#include "cosc/validation.hpp"

namespace {

int run_sweep_command(const std::optional<std::string>& preset_id, const std::optional<std::string>& config_path,
                      const std::optional<std::string>& out_dir, const std::optional<int>& workers,
                      const std::optional<std::string>& convention, const std::optional<double>& quad_rel_tol) {
    cosc::SweepConfig cfg = preset_id ? cosc::preset(*preset_id) : cosc::load_config(*config_path);
    if (out_dir) cfg.output_path = *out_dir;
    if (workers) cfg.workers = *workers;
    if (convention) cfg.rate_convention = cosc::parse_rate_convention(convention->c_str());
    if (quad_rel_tol) cfg.quadrature.rel_tol = *quad_rel_tol;
    cfg.validate();

    const auto rows = cosc::run_sweep(cfg);
    const auto files = cosc::write_output(rows, cfg);
    size_t errors = 0;
    for (const auto& r : rows) errors += r.status != "ok";
    std::cout << cfg.name << ": " << rows.size() << " rows, " << errors << " error rows\n";
    for (const auto& f : files) std::cout << "  wrote " << f << "\n";
    return 0;
}

int run_validate_command(const std::optional<std::string>& convention) {
    cosc::LowTempOptions opt;
    if (convention) opt.rate_convention = cosc::parse_rate_convention(convention->c_str());
    const auto cases = cosc::run_low_temp_suite(opt);
    bool all = true;
    std::printf("%-4s %-6s %6s %6s %12s %12s %10s %9s %9s %s\n", "kind", "basis", "frac", "dT", "n1", "oracle_n1",
                "rel_dev", "tail", "cutoffs", "result");
    for (const auto& c : cases) {
        all = all && c.pass;
        char cut[32];
        std::snprintf(cut, sizeof(cut), "%d,%d", c.n_max1, c.n_max2);
        std::printf("%-4s %-6s %6.2f %6.2f %12.6g %12.6g %10.2e %9.1e %9s %s\n", cosc::to_string(c.kind),
                    cosc::to_string(c.basis), c.lambda_frac, c.deltaT, c.covariance_n1, c.oracle_n1, c.rel_dev,
                    c.tail, cut, c.pass ? "PASS" : c.status.c_str());
    }
    std::printf("%s: %zu cases\n", all ? "PASS" : "FAIL", cases.size());
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupled-oscillator steady states: master equations, Langevin and Gibbs references"};
    app.set_version_flag("--version", cosc::version());
    app.require_subcommand(1);

    std::optional<int> workers;
    std::optional<std::string> convention;
    std::optional<double> quad_rel_tol;
    app.add_option("--workers", workers, "Concurrent grid-point workers")->check(CLI::PositiveNumber);
    app.add_option("--rate-convention", convention, "Global rotating-wave rate convention")
        ->check(CLI::IsMember({"flat", "bose"}));
    app.add_option("--quad-rel-tol", quad_rel_tol, "Relative tolerance of the Langevin quadrature")
        ->check(CLI::PositiveNumber);

    auto* sweep = app.add_subcommand("sweep", "Run a preset or config-file sweep and write CSV + manifest");
    std::optional<std::string> preset_id, config_path, out_dir;
    auto* preset_opt = sweep->add_option("--preset", preset_id, "Preset id");
    auto* config_opt = sweep->add_option("--config", config_path, "JSON sweep config")->check(CLI::ExistingFile);
    preset_opt->excludes(config_opt);
    sweep->add_option("--out", out_dir, "Output directory");
    sweep->add_option("--workers", workers, "Concurrent grid-point workers")->check(CLI::PositiveNumber);
    sweep->add_option("--rate-convention", convention, "Global rotating-wave rate convention")
        ->check(CLI::IsMember({"flat", "bose"}));
    sweep->add_option("--quad-rel-tol", quad_rel_tol, "Relative tolerance of the Langevin quadrature")
        ->check(CLI::PositiveNumber);
    bool list = false;
    sweep->add_flag("--list-presets", list, "Print preset ids and exit");

    auto* validate = app.add_subcommand("validate", "Check covariance solutions against the Fock-space oracle");
    bool low_temp = false;
    validate->add_flag("--low-temp", low_temp, "Low-temperature equivalence suite")->required();
    validate->add_option("--rate-convention", convention, "Global rotating-wave rate convention")
        ->check(CLI::IsMember({"flat", "bose"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            if (list) {
                for (const auto& id : cosc::preset_ids()) std::cout << id << "\n";
                return 0;
            }
            if (!preset_id && !config_path) {
                std::cerr << "sweep: one of --preset or --config is required\n";
                return 2;
            }
            return run_sweep_command(preset_id, config_path, out_dir, workers, convention, quad_rel_tol);
        }
        return run_validate_command(convention);
    } catch (const cosc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
