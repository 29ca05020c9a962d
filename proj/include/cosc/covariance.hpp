// covariance.hpp — Ladder/quadrature conventions and Gaussian second-moment containers

#pragma once

#include <Eigen/Dense>

namespace cosc {

// Ladder basis order used everywhere: (a1, a2, a1', a2').
enum class Op : int { a1 = 0, a2 = 1, a1d = 2, a2d = 3 };

inline int idx(Op op) { return static_cast<int>(op); }

// [X_p, X_q] for X = (a1, a2, a1', a2').
Eigen::Matrix4d ladder_commutators();

// Y = T X with Y = (x1, p1, x2, p2), x = (a + a')/sqrt2, p = (a - a')/(i sqrt2).
Eigen::Matrix4cd quadrature_from_ladder();

// sigma_ij = <Y_i Y_j + Y_j Y_i>/2 over (x1, p1, x2, p2); vacuum = diag(1/2, ...).
struct CovarianceMatrix {
    Eigen::Matrix4d sigma{Eigen::Matrix4d::Identity() * 0.5};

    static CovarianceMatrix from_matrix(const Eigen::Matrix4d& m);   // checks symmetry within 1e-12
};

// Characteristic-function moments ordered
// (x1x1, x1p1, x1x2, x1p2, p1p1, p1x2, p1p2, x2x2, x2p2, p2p2).
struct SymplecticMoments {
    Eigen::Matrix<double, 10, 1> values{Eigen::Matrix<double, 10, 1>::Zero()};
};

// sigma_{xi xj} = sbar_{pi pj}/2, sigma_{pi pj} = sbar_{xi xj}/2, sigma_{xj pi} = -sbar_{xi pj}/2.
CovarianceMatrix covariance_from_symplectic(const SymplecticMoments& m);
SymplecticMoments symplectic_from_covariance(const CovarianceMatrix& cov);

// M_pq = <X_p X_q> in ladder order -> symmetrized quadrature covariance.
CovarianceMatrix covariance_from_ladder_moments(const Eigen::Matrix4cd& M);
Eigen::Matrix4cd ladder_moments_from_covariance(const CovarianceMatrix& cov);

// <a_m' a_m> = (sigma_xx + sigma_pp - 1)/2, mode in {1, 2}.
double occupation_from_covariance(const CovarianceMatrix& cov, int mode);

} // namespace cosc
