// langevin.cpp — Drift matrix, noise spectra and the folded frequency integral

#include "cosc/langevin.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "cosc/errors.hpp"
#include "cosc/observables.hpp"
#include "cosc/quadrature.hpp"

namespace cosc {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

// drift-basis position (a1, a1', a2, a2') -> ladder index (a1, a2, a1', a2')
constexpr int to_ladder[4] = {0, 2, 1, 3};

Eigen::Matrix4cd inverse_checked(const Eigen::Matrix4cd& M) {
    const cd det = M.determinant();
    if (!(std::abs(det) > 1e-300)) throw Error(ErrorCode::Supercritical, "Langevin matrix singular");
    return M.inverse();
}

// Density f(nu) with <X_p X_q> = int f(nu) dnu, before reflection.
Eigen::Matrix4cd raw_density(const ModelParams& m, double nu) {
    const Eigen::Matrix4cd mp = inverse_checked(drift_matrix(m, nu));
    const Eigen::Matrix4cd mm = inverse_checked(drift_matrix(m, -nu));
    const double gam[2] = {m.gamma1(), m.gamma2()};
    const double beta[2] = {m.beta1(), m.beta2()};
    Eigen::Matrix4cd f = Eigen::Matrix4cd::Zero();
    for (int j = 0; j < 2; ++j) {
        const int a = 2 * j, ad = 2 * j + 1;    // drift-basis positions of a_j, a_j'
        const double n_emit = bose_occupation(nu, beta[j]) + 1.0;
        const double n_abs = bose_occupation(-nu, beta[j]);
        const double pref = gam[j] / M_PI;
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q)
                f(to_ladder[p], to_ladder[q]) +=
                    pref * (mp(p, a) * mm(q, ad) * n_emit + mp(p, ad) * mm(q, a) * n_abs);
    }
    return f;
}

// Upper triangle of the quadrature covariance density, 10 entries.
Eigen::VectorXd covariance_density(const ModelParams& m, const Eigen::Matrix4cd& T, double nu) {
    const Eigen::Matrix4cd f = raw_density(m, nu) + raw_density(m, -nu);
    const Eigen::Matrix4cd Y = T * f * T.transpose();
    Eigen::VectorXd out(10);
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) out(k++) = 0.5 * (Y(i, j) + Y(j, i)).real();
    return out;
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-4)) throw Error(ErrorCode::InvalidArgument, "rel_tol must be in (0, 1e-4]");
    if (!(abs_tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "abs_tol must be >= 0");
    if (!(window_factor >= 5.0)) throw Error(ErrorCode::InvalidArgument, "window_factor must be >= 5");
    if (max_subdivisions < 1) throw Error(ErrorCode::InvalidArgument, "max_subdivisions must be >= 1");
}

Eigen::Matrix4cd drift_matrix(const ModelParams& m, double nu) {
    const double w1 = m.omega1(), w2 = m.omega2(), g1 = m.gamma1(), g2 = m.gamma2();
    const cd l = I * m.lambda(), k = I * m.kappa();
    Eigen::Matrix4cd M;
    M << -I * nu + I * w1 + g1, 0.0, l, k,
         0.0, -I * nu - I * w1 + g1, -k, -l,
         l, k, -I * nu + I * w2 + g2, 0.0,
         -k, -l, 0.0, -I * nu - I * w2 + g2;
    return M;
}

Eigen::Matrix4cd spectral_integrand(const ModelParams& m, double nu) {
    if (nu == 0.0) throw Error(ErrorCode::PoleAtZero, "Bose factors are singular at nu = 0");
    return raw_density(m, -nu);
}

LangevinResult integrate_second_moments(const ModelParams& m, const QuadratureConfig& cfg) {
    cfg.validate();
    const NormalModes nm = normal_mode_frequencies(m);
    if (!(nm.omega_minus > 0.0)) throw Error(ErrorCode::Supercritical, "lower normal mode has zero frequency");
    const double Omega = cfg.window_factor * std::max({nm.omega_plus, m.omega1(), m.omega2()});
    const double width = std::max(m.gamma1(), m.gamma2());

    // Resonance-aware partition of [0, Omega]; [Omega, Omega + 1] carries the tail nu = Omega / t.
    std::vector<double> breaks{0.0, Omega, Omega + 1.0, 0.5 * (nm.omega_minus + nm.omega_plus)};
    for (double r : {nm.omega_minus, nm.omega_plus}) {
        breaks.push_back(r);
        for (double d = width; d < Omega; d *= 10.0) {
            if (r - d > 0.0) breaks.push_back(r - d);
            if (r + d < Omega) breaks.push_back(r + d);
        }
    }

    const Eigen::Matrix4cd T = quadrature_from_ladder();
    auto integrand = [&](double s) -> Eigen::VectorXd {
        if (s <= Omega) return covariance_density(m, T, s);
        const double t = 1.0 - (s - Omega);
        const double nu = Omega / t;
        return covariance_density(m, T, nu) * (Omega / (t * t));
    };

    const QuadResult q = integrate_adaptive(integrand, breaks, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
    LangevinResult out;
    out.quad_error = q.error;
    out.quad_target = std::max(cfg.abs_tol, cfg.rel_tol * q.value.cwiseAbs().maxCoeff());
    out.evaluations = q.evaluations;
    if (!q.converged)
        throw Error(ErrorCode::QuadratureNonConvergence,
                    "error " + std::to_string(q.error) + " (target " + std::to_string(out.quad_target) + ") after " + std::to_string(q.intervals) + " intervals");

    Eigen::Matrix4d s;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            s(i, j) = q.value(k++);
            s(j, i) = s(i, j);
        }
    out.covariance = CovarianceMatrix::from_matrix(s);
    return out;
}

LangevinResult steady_second_moments(const ModelParams& m, const QuadratureConfig& cfg) {
    LangevinResult out = integrate_second_moments(m, cfg);
    symplectic_eigenvalues(out.covariance);
    return out;
}

} // namespace cosc
