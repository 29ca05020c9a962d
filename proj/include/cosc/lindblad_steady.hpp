// lindblad_steady.hpp — Steady-state second moments of the quadratic Lindblad equation

#pragma once

#include <Eigen/Dense>

#include "cosc/covariance.hpp"
#include "cosc/dissipators.hpp"
#include "cosc/model.hpp"

namespace cosc {

using Vector10d = Eigen::Matrix<double, 10, 1>;
using Matrix10d = Eigen::Matrix<double, 10, 10>;

struct SteadyStateSolution {
    CovarianceMatrix covariance;
    SymplecticMoments moments;
    Scheme scheme;
    double residual{0.0};    // ||G - Lambda sbar||_inf
    double rcond{0.0};       // reciprocal condition estimate of Lambda
};

// Steady-state equation G = Lambda sbar for the characteristic-function moments.
Vector10d build_G(const RateTable& rates);
Matrix10d build_Lambda(const RateTable& rates, const ModelParams& model);

// Refuses lambda > (1 - 1e-6) lambda_c.
SteadyStateSolution solve_steady_covariance(const ModelParams& model, const RateTable& rates);

} // namespace cosc
