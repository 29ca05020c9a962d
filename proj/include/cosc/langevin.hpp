// langevin.hpp — Exact steady-state moments from the Fourier-space quantum Langevin equations

#pragma once

#include <Eigen/Dense>

#include "cosc/covariance.hpp"
#include "cosc/model.hpp"

namespace cosc {

struct QuadratureConfig {
    double rel_tol{1e-10};
    double abs_tol{1e-13};
    double window_factor{10.0};    // Omega = window_factor * max(w+, w1, w2)
    int max_subdivisions{20000};

    void validate() const;
};

// M(nu) over (a1(nu), a1'(-nu), a2(nu), a2'(-nu)) with damping diag(g1, g1, g2, g2).
Eigen::Matrix4cd drift_matrix(const ModelParams& model, double nu);

// Spectral density f_pq(nu) with <X_p X_q> = int f_pq(nu) dnu, ladder order
// (a1, a2, a1', a2'). Oriented so that f for <a1' a1> peaks at nu = +w.
// Throws PoleAtZero at nu = 0.
Eigen::Matrix4cd spectral_integrand(const ModelParams& model, double nu);

struct LangevinResult {
    CovarianceMatrix covariance;
    double quad_error{0.0};      // absolute error estimate (inf-norm over covariance entries)
    double quad_target{0.0};     // max(abs_tol, rel_tol * ||sigma||)
    int evaluations{0};
};

// Quadrature only; the covariance is not checked for physicality.
LangevinResult integrate_second_moments(const ModelParams& model, const QuadratureConfig& cfg = {});
// As above, then throws UnphysicalCovariance if n_minus < 1/2 - 1e-9. The noise spectrum
// evaluated at negative frequencies lowers occupations by about gamma / (pi omega), so
// this happens when thermal occupations fall below that scale.
LangevinResult steady_second_moments(const ModelParams& model, const QuadratureConfig& cfg = {});

} // namespace cosc
