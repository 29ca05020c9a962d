// lindblad_steady.cpp — G vector, Lambda matrix and the 10x10 steady-state solve

#include "cosc/lindblad_steady.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "cosc/errors.hpp"
#include "cosc/observables.hpp"

namespace cosc {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

// Cross rates in mask order: (a1,a2) (a1,a2') (a1',a2) (a1',a2') (a2,a1) (a2,a1') (a2',a1) (a2',a1').
std::array<double, 8> cross_rates(const RateTable& g) {
    return {g(Op::a1, Op::a2), g(Op::a1, Op::a2d), g(Op::a1d, Op::a2), g(Op::a1d, Op::a2d),
            g(Op::a2, Op::a1), g(Op::a2, Op::a1d), g(Op::a2d, Op::a1), g(Op::a2d, Op::a1d)};
}

// Sign-mask shorthand: 2 Gm(i..p) = sum_k (-1)^{mask_k} cross_k.
struct Mask {
    std::array<double, 8> x;
    double operator()(int i, int j, int k, int l, int m, int n, int o, int p) const {
        const int bits[8] = {i, j, k, l, m, n, o, p};
        double s = 0.0;
        for (int q = 0; q < 8; ++q) s += (bits[q] ? -x[q] : x[q]);
        return 0.5 * s;
    }
};

void check_real(const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic>& v, ErrorCode code, const char* name) {
    const double im = v.imag().cwiseAbs().maxCoeff();
    const double scale = v.cwiseAbs().maxCoeff();
    if (im > 1e-10 * std::max(scale, 1e-300) && im > 0.0)
        throw Error(code, std::string(name) + " has imaginary part " + std::to_string(im));
}

} // namespace

Vector10d build_G(const RateTable& g) {
    const double g11 = g(Op::a1, Op::a1), g11d = g(Op::a1, Op::a1d), g1d1 = g(Op::a1d, Op::a1),
                 g1d1d = g(Op::a1d, Op::a1d);
    const double g22 = g(Op::a2, Op::a2), g22d = g(Op::a2, Op::a2d), g2d2 = g(Op::a2d, Op::a2),
                 g2d2d = g(Op::a2d, Op::a2d);
    const auto c = cross_rates(g);
    const double p = c[0], q = c[1], r = c[2], t = c[3], u = c[4], v = c[5], w = c[6], z = c[7];

    Eigen::Matrix<cd, 10, 1> G;
    G(0) = g11 + g11d + g1d1 + g1d1d;
    G(1) = 2.0 * I * (g11 - g1d1d);
    G(2) = p + q + r + t + u + v + w + z;
    G(3) = I * (p - q + r - t + u + v - w - z);
    G(4) = -g11 + g11d + g1d1 - g1d1d;
    G(5) = I * (p + q - r - t + u - v + w - z);
    G(6) = -p + q + r - t - u + v + w - z;
    G(7) = g22 + g22d + g2d2 + g2d2d;
    G(8) = 2.0 * I * (g22 - g2d2d);
    G(9) = -g22 + g22d + g2d2 - g2d2d;
    check_real(G, ErrorCode::NonRealG, "G");
    return G.real();
}

// Rows of d sbar/dt = G - Lambda sbar from the adjoint Lindblad generator. Hamiltonian
// entries (w1, w2, kappa, lambda) enter with weight 2; Lambda(1,4) carries +i Gm(1,1,1,1,0,0,0,0).
Matrix10d build_Lambda(const RateTable& g, const ModelParams& m) {
    const Mask G{cross_rates(g)};
    const double w1 = 2.0 * m.omega1(), w2 = 2.0 * m.omega2();
    const double kpl = 2.0 * (m.kappa() + m.lambda());
    const double lmk = 2.0 * (m.lambda() - m.kappa());
    const double d1 = g(Op::a1, Op::a1d) - g(Op::a1d, Op::a1);
    const double d2 = g(Op::a2, Op::a2d) - g(Op::a2d, Op::a2);
    const double d12 = d1 + d2;

    const double A = G(1, 0, 1, 0, 0, 0, 1, 1);
    const double B = G(0, 0, 1, 1, 1, 0, 1, 0);
    const cd C = I * G(1, 1, 1, 1, 0, 0, 0, 0) - kpl;
    const cd D = I * G(0, 0, 0, 0, 1, 1, 1, 1) - kpl;
    const cd E = I * G(1, 0, 0, 1, 0, 1, 1, 0) + lmk;
    const cd F = I * G(0, 1, 1, 0, 1, 0, 0, 1) + lmk;

    Eigen::Matrix<cd, 10, 10> L;
    L.setZero();
    L.row(0) << d1, -w1, A, C, 0, 0, 0, 0, 0, 0;
    L.row(1) << w1, 2.0 * d1, E, B, -w1, A, C, 0, 0, 0;
    L.row(2) << B, D, d12, -w2, 0, -w1, 0, A, C, 0;
    L.row(3) << F, A, w2, d12, 0, 0, -w1, 0, A, C;
    L.row(4) << 0, w1, 0, 0, d1, E, B, 0, 0, 0;
    L.row(5) << 0, B, w1, 0, D, d12, -w2, E, B, 0;
    L.row(6) << 0, F, 0, w1, A, w2, d12, 0, E, B;
    L.row(7) << 0, 0, B, 0, 0, D, 0, d2, -w2, 0;
    L.row(8) << 0, 0, F, B, 0, A, D, w2, 2.0 * d2, -w2;
    L.row(9) << 0, 0, 0, F, 0, 0, A, 0, w2, d2;
    check_real(L, ErrorCode::NonRealLambda, "Lambda");
    return L.real();
}

SteadyStateSolution solve_steady_covariance(const ModelParams& m, const RateTable& rates) {
    if (m.lambda() > (1.0 - 1e-6) * m.lambda_c())
        throw Error(ErrorCode::SingularSystem, "lambda within 1e-6 of lambda_c; system too ill-conditioned");
    const Vector10d G = build_G(rates);
    const Matrix10d L = build_Lambda(rates, m);
    const Eigen::PartialPivLU<Matrix10d> lu(L);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-16))
        throw Error(ErrorCode::SingularSystem, "Lambda singular (rcond " + std::to_string(rcond) + ")");

    Vector10d x = lu.solve(G);
    const double tol = 1e-9 * std::max(1.0, G.cwiseAbs().maxCoeff());
    double residual = (G - L * x).cwiseAbs().maxCoeff();
    if (residual > tol) {
        x += lu.solve(G - L * x);
        residual = (G - L * x).cwiseAbs().maxCoeff();
    }
    if (!(residual <= tol))
        throw Error(ErrorCode::SingularSystem, "residual " + std::to_string(residual) + " above tolerance");

    SteadyStateSolution out;
    out.moments.values = x;
    out.covariance = covariance_from_symplectic(out.moments);
    out.scheme = rates.scheme();
    out.residual = residual;
    out.rcond = rcond;
    symplectic_eigenvalues(out.covariance);    // throws UnphysicalCovariance
    return out;
}

} // namespace cosc
