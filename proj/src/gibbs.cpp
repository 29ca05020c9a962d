// gibbs.cpp — Gibbs-state moments transformed from the uncoupled normal modes

#include "cosc/gibbs.hpp"

#include <cmath>
#include <complex>

#include "cosc/errors.hpp"

namespace cosc {

CovarianceMatrix gibbs_second_moments(const GibbsSpec& spec) {
    if (!(spec.T > 0.0)) throw Error(ErrorCode::NonPositiveParameter, "temperature must be positive");
    const NormalModes nm = normal_mode_frequencies(spec.model);
    if (!(nm.omega_minus > 0.0)) throw Error(ErrorCode::Supercritical, "lower normal mode has zero frequency");
    const double beta = 1.0 / spec.T;
    const double np = bose_occupation(nm.omega_plus, beta);
    const double nmn = bose_occupation(nm.omega_minus, beta);

    // <C_k C_l> for C = (c+, c-, c+', c-')
    Eigen::Matrix4d CC = Eigen::Matrix4d::Zero();
    CC(0, 2) = np + 1.0;
    CC(2, 0) = np;
    CC(1, 3) = nmn + 1.0;
    CC(3, 1) = nmn;

    const Eigen::Matrix4d S = mode_transform(spec.model).S;
    const Eigen::Matrix4d M = S * CC * S.transpose();
    return covariance_from_ladder_moments(M.cast<std::complex<double>>());
}

double gibbs_occupation(const GibbsSpec& spec, int mode) {
    return occupation_from_covariance(gibbs_second_moments(spec), mode);
}

} // namespace cosc
