// covariance.cpp — Conversions between ladder moments, covariances and symplectic moments

#include "cosc/covariance.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "cosc/errors.hpp"

namespace cosc {

namespace {

using cd = std::complex<double>;

// Symplectic vector slot for the unordered quadrature pair (k, l), k, l in (x1, p1, x2, p2).
int slot(int k, int l) {
    static const int table[4][4] = {{0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 9}};
    return table[k][l];
}

// Quadrature index: x_m -> 2(m-1), p_m -> 2(m-1)+1.
int xq(int m) { return 2 * m; }
int pq(int m) { return 2 * m + 1; }

} // namespace

Eigen::Matrix4d ladder_commutators() {
    Eigen::Matrix4d c = Eigen::Matrix4d::Zero();
    c(0, 2) = 1.0;
    c(2, 0) = -1.0;
    c(1, 3) = 1.0;
    c(3, 1) = -1.0;
    return c;
}

Eigen::Matrix4cd quadrature_from_ladder() {
    const double r = 1.0 / std::sqrt(2.0);
    const cd i(0.0, 1.0);
    Eigen::Matrix4cd T = Eigen::Matrix4cd::Zero();
    for (int m = 0; m < 2; ++m) {
        T(xq(m), m) = r;
        T(xq(m), m + 2) = r;
        T(pq(m), m) = -i * r;
        T(pq(m), m + 2) = i * r;
    }
    return T;
}

CovarianceMatrix CovarianceMatrix::from_matrix(const Eigen::Matrix4d& m) {
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (!(asym <= 1e-12 * scale))
        throw Error(ErrorCode::InvalidArgument, "covariance not symmetric (" + std::to_string(asym) + ")");
    CovarianceMatrix cov;
    cov.sigma = 0.5 * (m + m.transpose());
    return cov;
}

CovarianceMatrix covariance_from_symplectic(const SymplecticMoments& sm) {
    const auto& v = sm.values;
    Eigen::Matrix4d s;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            s(xq(i), xq(j)) = 0.5 * v(slot(pq(i), pq(j)));
            s(pq(i), pq(j)) = 0.5 * v(slot(xq(i), xq(j)));
            s(xq(j), pq(i)) = -0.5 * v(slot(xq(i), pq(j)));
            s(pq(i), xq(j)) = s(xq(j), pq(i));
        }
    }
    return CovarianceMatrix::from_matrix(s);
}

SymplecticMoments symplectic_from_covariance(const CovarianceMatrix& cov) {
    const auto& s = cov.sigma;
    SymplecticMoments out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.values(slot(pq(i), pq(j))) = 2.0 * s(xq(i), xq(j));
            out.values(slot(xq(i), xq(j))) = 2.0 * s(pq(i), pq(j));
            out.values(slot(xq(i), pq(j))) = -2.0 * s(xq(j), pq(i));
        }
    }
    return out;
}

CovarianceMatrix covariance_from_ladder_moments(const Eigen::Matrix4cd& M) {
    const Eigen::Matrix4cd T = quadrature_from_ladder();
    const Eigen::Matrix4cd Y = T * M * T.transpose();
    const Eigen::Matrix4cd sym = 0.5 * (Y + Y.transpose());
    return CovarianceMatrix::from_matrix(sym.real());
}

Eigen::Matrix4cd ladder_moments_from_covariance(const CovarianceMatrix& cov) {
    // <Y_k Y_l> = sigma_kl + [Y_k, Y_l]/2 with [x_m, p_m] = i
    Eigen::Matrix4cd Y = cov.sigma.cast<cd>();
    for (int m = 0; m < 2; ++m) {
        Y(xq(m), pq(m)) += cd(0.0, 0.5);
        Y(pq(m), xq(m)) -= cd(0.0, 0.5);
    }
    const Eigen::Matrix4cd Tinv = quadrature_from_ladder().inverse();
    return Tinv * Y * Tinv.transpose();
}

double occupation_from_covariance(const CovarianceMatrix& cov, int mode) {
    if (mode != 1 && mode != 2) throw Error(ErrorCode::InvalidArgument, "mode must be 1 or 2");
    const int m = mode - 1;
    return 0.5 * (cov.sigma(xq(m), xq(m)) + cov.sigma(pq(m), pq(m)) - 1.0);
}

} // namespace cosc
