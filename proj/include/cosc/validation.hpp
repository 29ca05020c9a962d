// validation.hpp — Low-temperature equivalence suite against the Fock oracle

#pragma once

#include <string>
#include <vector>

#include "cosc/dissipators.hpp"
#include "cosc/model.hpp"

namespace cosc {

struct LowTempCase {
    CouplingKind kind{CouplingKind::PositionPosition};
    Basis basis{Basis::Local};
    double lambda_frac{0.0};
    double deltaT{0.0};
    double T1{0.0};
    double T2{0.0};
    double covariance_n1{0.0};
    double covariance_n2{0.0};
    double oracle_n1{0.0};
    double oracle_n2{0.0};
    double rel_dev{0.0};    // max over both modes
    double tail{0.0};
    int n_max1{0};
    int n_max2{0};
    std::string status{"ok"};
    bool pass{false};
};

struct LowTempOptions {
    double T2{1.96};
    std::vector<double> deltaT_list{0.0, 0.5};
    std::vector<double> lambda_fracs{0.2, 0.5};
    double rel_tol{1e-6};
    double tail_tol{1e-8};
    RateConvention rate_convention{RateConvention::Bose};
};

// Every (kind, deltaT, lambda, basis) combination with omega1 = 5, omega2 = 2, T1 = T2 - deltaT.
std::vector<LowTempCase> run_low_temp_suite(const LowTempOptions& options = {});

} // namespace cosc
