// observables.cpp — Symplectic eigenvalues and mutual information of two-mode Gaussian states

#include "cosc/observables.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "cosc/errors.hpp"

namespace cosc {

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& cov) {
    // n_k are the moduli of the eigenvalues of the antisymmetric s^{1/2} Omega s^{1/2};
    // i times it is Hermitian, so both n_k carry absolute error ~ eps ||sigma||.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(cov.sigma);
    const double floor = -1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    if (es.eigenvalues().minCoeff() < floor)
        throw Error(ErrorCode::UnphysicalCovariance,
                    "covariance not positive semidefinite: " + std::to_string(es.eigenvalues().minCoeff()));
    const Eigen::Vector4d root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4d half = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
    Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
    omega(0, 1) = omega(2, 3) = 1.0;
    omega(1, 0) = omega(3, 2) = -1.0;
    const Eigen::Matrix4cd h = std::complex<double>(0.0, 1.0) * (half * omega * half).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> hs(h, Eigen::EigenvaluesOnly);
    // eigenvalues ascending: (-n+, -n-, n-, n+)
    const Eigen::Vector4d ev = hs.eigenvalues();
    SymplecticSpectrum out{0.5 * (ev(2) - ev(1)), 0.5 * (ev(3) - ev(0))};
    if (out.n_minus < 0.5 - 1e-9)
        throw Error(ErrorCode::UnphysicalCovariance,
                    "symplectic eigenvalue " + std::to_string(out.n_minus) + " < 1/2");
    return out;
}

double entropy_function(double x) {
    const double e = x - 0.5;
    if (e <= 0.0) return 0.0;
    if (e < 1e-8) return (x + 0.5) * std::log1p(e) - e * std::log(e);
    return (x + 0.5) * std::log(x + 0.5) - e * std::log(e);
}

double gaussian_mutual_information(const CovarianceMatrix& cov) {
    const SymplecticSpectrum sp = symplectic_eigenvalues(cov);
    const double a = std::sqrt(std::max(0.0, cov.sigma.topLeftCorner<2, 2>().determinant()));
    const double b = std::sqrt(std::max(0.0, cov.sigma.bottomRightCorner<2, 2>().determinant()));
    const double I = entropy_function(a) + entropy_function(b) - entropy_function(sp.n_minus) -
                     entropy_function(sp.n_plus);
    if (I < -1e-9) throw Error(ErrorCode::UnphysicalCovariance, "negative mutual information");
    return std::max(0.0, I);
}

} // namespace cosc
