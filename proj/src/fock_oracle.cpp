// fock_oracle.cpp — Number-basis generator, dense null-space and preconditioned GMRES steady states

#include "cosc/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "cosc/errors.hpp"
#include "cosc/gibbs.hpp"

namespace cosc {

namespace {

using cd = std::complex<double>;
using Triplet = Eigen::Triplet<cd>;
constexpr cd I{0.0, 1.0};

SparseC lowering(int n_max, int other, bool first) {
    const int n = n_max + 1;
    std::vector<Triplet> t;
    for (int k = 1; k < n; ++k) {
        for (int o = 0; o <= other; ++o) {
            const int row = first ? (k - 1) * (other + 1) + o : o * n + (k - 1);
            const int col = first ? k * (other + 1) + o : o * n + k;
            t.emplace_back(row, col, std::sqrt(static_cast<double>(k)));
        }
    }
    const int dim = n * (other + 1);
    SparseC a(dim, dim);
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

// Diagonal blocks of rho that the dynamics keeps closed.
using Sectors = std::vector<std::vector<int>>;
using Blocks = std::vector<Eigen::MatrixXcd>;

Sectors make_sectors(const FockGenerator& g) {
    std::map<int, std::vector<int>> by_label;
    for (int d = 0; d < g.dim(); ++d) {
        const int n = g.n_of(1, d) + g.n_of(2, d);
        by_label[g.conserves_excitations() ? n : n % 2].push_back(d);
    }
    Sectors s;
    for (auto& kv : by_label) s.push_back(std::move(kv.second));
    return s;
}

Eigen::MatrixXcd embed(const Sectors& sec, const Blocks& b, int dim) {
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (size_t s = 0; s < sec.size(); ++s)
        for (size_t i = 0; i < sec[s].size(); ++i)
            for (size_t j = 0; j < sec[s].size(); ++j) full(sec[s][i], sec[s][j]) = b[s](i, j);
    return full;
}

Blocks extract(const Sectors& sec, const Eigen::MatrixXcd& full) {
    Blocks b(sec.size());
    for (size_t s = 0; s < sec.size(); ++s) {
        const int n = static_cast<int>(sec[s].size());
        b[s].resize(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[s](i, j) = full(sec[s][i], sec[s][j]);
    }
    return b;
}

cd dot(const Blocks& x, const Blocks& y) {
    cd s = 0.0;
    for (size_t k = 0; k < x.size(); ++k) s += x[k].conjugate().cwiseProduct(y[k]).sum();
    return s;
}

double norm(const Blocks& x) { return std::sqrt(std::real(dot(x, x))); }

void axpy(Blocks& y, cd a, const Blocks& x) {
    for (size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

void scale(Blocks& x, cd a) {
    for (auto& m : x) m *= a;
}

cd trace(const Blocks& x) {
    cd t = 0.0;
    for (const auto& m : x) t += m.trace();
    return t;
}

// P(X) = -i (Heff X - X Heff') per block, inverted through the complex Schur form of Heff.
class Preconditioner {
public:
    Preconditioner(const FockGenerator& g, const Sectors& sec) {
        const Eigen::MatrixXcd heff =
            Eigen::MatrixXcd(g.hamiltonian()) - 0.5 * I * Eigen::MatrixXcd(g.anticommutator_part());
        for (const auto& s : sec) {
            const int n = static_cast<int>(s.size());
            Eigen::MatrixXcd h(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) h(i, j) = heff(s[i], s[j]);
            Eigen::ComplexSchur<Eigen::MatrixXcd> schur(h);
            heff_.push_back(h);
            U_.push_back(schur.matrixU());
            Tt_.push_back(schur.matrixT().transpose());
        }
    }

    Blocks forward(const Blocks& x) const {
        Blocks y(x.size());
        for (size_t k = 0; k < x.size(); ++k) y[k] = -I * (heff_[k] * x[k] - x[k] * heff_[k].adjoint());
        return y;
    }

    Blocks inverse(const Blocks& c) const {
        Blocks x(c.size());
        for (size_t k = 0; k < c.size(); ++k) x[k] = solve_block(k, c[k]);
        return x;
    }

private:
    // T Y - Y T' = i U' C U, X = U Y U'.
    Eigen::MatrixXcd solve_block(size_t k, const Eigen::MatrixXcd& c) const {
        const Eigen::MatrixXcd& U = U_[k];
        const Eigen::MatrixXcd& Tt = Tt_[k];    // column r of Tt is row r of T
        const int n = static_cast<int>(U.rows());
        const Eigen::MatrixXcd rhs = I * (U.adjoint() * c * U);
        Eigen::MatrixXcd Y(n, n);
        Eigen::VectorXcd r(n);
        for (int j = n - 1; j >= 0; --j) {
            r = rhs.col(j);
            const int m = n - 1 - j;
            if (m > 0) r.noalias() += Y.rightCols(m) * Tt.col(j).tail(m).conjugate();
            const cd shift = std::conj(Tt(j, j));
            for (int i = n - 1; i >= 0; --i) {
                cd acc = r(i);
                const int tail = n - 1 - i;
                if (tail > 0) acc -= Tt.col(i).tail(tail).cwiseProduct(Y.col(j).tail(tail)).sum();
                Y(i, j) = acc / (Tt(i, i) - shift);
            }
        }
        return U * Y * U.adjoint();
    }

    std::vector<Eigen::MatrixXcd> heff_, U_, Tt_;
};

OracleResult finish(const FockGenerator& g, Eigen::MatrixXcd rho, const std::string& method, int iterations,
                    const Sectors* sec) {
    OracleResult out;
    out.method = method;
    out.iterations = iterations;
    out.n_max1 = g.n_max1();
    out.n_max2 = g.n_max2();
    rho /= rho.trace();
    const double scale = rho.cwiseAbs().maxCoeff();
    out.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff() / scale;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    out.residual = g.apply(rho).cwiseAbs().maxCoeff();

    double emin = 0.0;
    if (sec) {
        for (const auto& blk : extract(*sec, rho))
            emin = std::min(emin, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(blk, Eigen::EigenvaluesOnly)
                                      .eigenvalues()
                                      .minCoeff());
    } else {
        emin = std::min(emin, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho, Eigen::EigenvaluesOnly)
                                  .eigenvalues()
                                  .minCoeff());
    }
    out.min_eigenvalue = emin;

    for (int d = 0; d < g.dim(); ++d) {
        const double p = rho(d, d).real();
        out.n1 += p * g.n_of(1, d);
        out.n2 += p * g.n_of(2, d);
        if (g.n_of(1, d) == g.n_max1()) out.tail1 += p;
        if (g.n_of(2, d) == g.n_max2()) out.tail2 += p;
    }
    out.tail = std::max(out.tail1, out.tail2);
    out.rho = std::move(rho);

    if (out.hermiticity_error > 1e-10)
        throw Error(ErrorCode::OracleNonConvergence,
                    "steady state not Hermitian (" + std::to_string(out.hermiticity_error) + ")");
    if (out.min_eigenvalue < -1e-9)
        throw Error(ErrorCode::OracleNonConvergence,
                    "steady state not positive (" + std::to_string(out.min_eigenvalue) + ")");
    return out;
}

} // namespace

void TruncationSpec::validate() const {
    if (n_max1 < 1 || n_max2 < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
    if (!(tail_tol > 0.0 && tail_tol <= 1e-4)) throw Error(ErrorCode::InvalidArgument, "tail_tol must be in (0, 1e-4]");
    if (static_cast<long>(n_max1 + 1) * (n_max2 + 1) > max_dim)
        throw Error(ErrorCode::DimensionTooLarge,
                    "Hilbert dimension " + std::to_string((n_max1 + 1) * (n_max2 + 1)) + " exceeds cap " +
                        std::to_string(max_dim));
}

FockGenerator::FockGenerator(const ModelParams& m, const RateTable& rates, const TruncationSpec& trunc)
    : n1_(trunc.n_max1), n2_(trunc.n_max2), dim_((trunc.n_max1 + 1) * (trunc.n_max2 + 1)), gamma_(rates.matrix()) {
    trunc.validate();
    const SparseC a1 = lowering(n1_, n2_, true);
    const SparseC a2 = lowering(n2_, n1_, false);
    A_[0] = a1;
    A_[1] = a2;
    A_[2] = SparseC(a1.adjoint());
    A_[3] = SparseC(a2.adjoint());

    H_ = m.omega1() * (A_[2] * A_[0]) + m.omega2() * (A_[3] * A_[1]) +
         m.lambda() * (A_[0] * A_[3] + A_[2] * A_[1]) + m.kappa() * (A_[0] * A_[1] + A_[2] * A_[3]);
    H_.prune(cd(0.0));

    K_ = SparseC(dim_, dim_);
    for (int i = 0; i < 4; ++i) {
        B_[i] = SparseC(dim_, dim_);
        for (int j = 0; j < 4; ++j) {
            const double g = gamma_(i, j);
            if (g == 0.0) continue;
            B_[i] += g * A_[j];
            K_ += g * (A_[j] * A_[i]);
        }
    }

    number_conserving_ = m.kappa() == 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if ((i < 2) == (j < 2) && gamma_(i, j) != 0.0) number_conserving_ = false;
}

int FockGenerator::n_of(int mode, int index) const {
    return mode == 1 ? index / (n2_ + 1) : index % (n2_ + 1);
}

Eigen::MatrixXcd FockGenerator::apply(const Eigen::MatrixXcd& rho) const {
    Eigen::MatrixXcd out = -I * (H_ * rho - rho * H_) - 0.5 * (K_ * rho + rho * K_);
    for (int i = 0; i < 4; ++i) {
        if (B_[i].nonZeros() == 0) continue;
        out.noalias() += A_[i] * (rho * B_[i]);
    }
    return out;
}

Eigen::MatrixXcd FockGenerator::dense_superoperator() const {
    const long n2 = static_cast<long>(dim_) * dim_;
    Eigen::MatrixXcd S(n2, n2);
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (int l = 0; l < dim_; ++l) {
        for (int k = 0; k < dim_; ++k) {
            e(k, l) = 1.0;
            const Eigen::MatrixXcd col = apply(e);
            S.col(k + static_cast<long>(l) * dim_) = Eigen::Map<const Eigen::VectorXcd>(col.data(), n2);
            e(k, l) = 0.0;
        }
    }
    return S;
}

FockGenerator build_generator(const ModelParams& model, const RateTable& rates, const TruncationSpec& trunc) {
    return FockGenerator(model, rates, trunc);
}

OracleResult oracle_steady_state_dense(const FockGenerator& g) {
    const int D = g.dim();
    const long n2 = static_cast<long>(D) * D;
    Eigen::MatrixXcd S = g.dense_superoperator();

    Eigen::FullPivLU<Eigen::MatrixXcd> lu(S);
    lu.setThreshold(1e-10);
    if (lu.dimensionOfKernel() > 1)
        throw Error(ErrorCode::NonUniqueSteadyState,
                    "null space dimension " + std::to_string(lu.dimensionOfKernel()));

    // Replace the rho(0,0) equation by the trace condition.
    for (long c = 0; c < n2; ++c) S(0, c) = 0.0;
    for (int d = 0; d < D; ++d) S(0, d + static_cast<long>(d) * D) = 1.0;
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n2);
    rhs(0) = 1.0;
    const Eigen::VectorXcd x = S.partialPivLu().solve(rhs);
    Eigen::MatrixXcd rho = Eigen::Map<const Eigen::MatrixXcd>(x.data(), D, D);
    return finish(g, rho, "dense", 0, nullptr);
}

OracleResult oracle_steady_state_iterative(const FockGenerator& g) {
    const int D = g.dim();
    const Sectors sec = make_sectors(g);
    const Preconditioner P(g, sec);

    // Product state of thermal marginals: seed and bordering vector (unit trace).
    Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Zero(D, D);
    {
        const double q1 = 0.3, q2 = 0.5;
        for (int d = 0; d < D; ++d) rho0(d, d) = std::pow(q1, g.n_of(1, d)) * std::pow(q2, g.n_of(2, d));
        rho0 /= rho0.trace();
    }
    const Blocks v = extract(sec, rho0);

    auto op = [&](const Blocks& s) {
        const Blocks r = P.inverse(s);
        Blocks out = extract(sec, g.apply(embed(sec, r, D)));
        axpy(out, trace(r), v);
        return out;
    };

    Blocks x = P.forward(v);
    const double bnorm = norm(v);
    const double tol = 1e-13 * bnorm;
    const int restart = 60, max_iter = 4000;
    int iterations = 0;
    double rnorm = 0.0;

    while (true) {
        Blocks r = v;
        axpy(r, -1.0, op(x));
        rnorm = norm(r);
        if (rnorm <= tol || iterations >= max_iter) break;

        std::vector<Blocks> V{r};
        scale(V[0], 1.0 / rnorm);
        Eigen::MatrixXcd Hh = Eigen::MatrixXcd::Zero(restart + 1, restart);
        Eigen::VectorXcd cs(restart), sn(restart), e = Eigen::VectorXcd::Zero(restart + 1);
        e(0) = rnorm;
        int k = 0;
        while (k < restart && iterations < max_iter) {
            Blocks w = op(V[k]);
            ++iterations;
            for (int j = 0; j <= k; ++j) {
                Hh(j, k) = dot(V[j], w);
                axpy(w, -Hh(j, k), V[j]);
            }
            const double hnext = norm(w);
            Hh(k + 1, k) = hnext;
            for (int j = 0; j < k; ++j) {
                const cd t = std::conj(cs(j)) * Hh(j, k) + std::conj(sn(j)) * Hh(j + 1, k);
                Hh(j + 1, k) = -sn(j) * Hh(j, k) + cs(j) * Hh(j + 1, k);
                Hh(j, k) = t;
            }
            const double den = std::hypot(std::abs(Hh(k, k)), std::abs(Hh(k + 1, k)));
            cs(k) = Hh(k, k) / den;
            sn(k) = Hh(k + 1, k) / den;
            Hh(k, k) = den;
            Hh(k + 1, k) = 0.0;
            e(k + 1) = -sn(k) * e(k);
            e(k) = std::conj(cs(k)) * e(k);
            ++k;
            if (std::abs(e(k)) <= tol || hnext == 0.0) break;
            scale(w, 1.0 / hnext);
            V.push_back(std::move(w));
        }
        const Eigen::VectorXcd y =
            Hh.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(e.head(k));
        for (int j = 0; j < k; ++j) axpy(x, y(j), V[j]);
    }
    if (rnorm > 1e3 * tol)
        throw Error(ErrorCode::OracleNonConvergence,
                    "GMRES residual " + std::to_string(rnorm / bnorm) + " after " + std::to_string(iterations));
    return finish(g, embed(sec, P.inverse(x), D), "gmres", iterations, &sec);
}

OracleResult oracle_steady_occupations(const ModelParams& model, const RateTable& rates,
                                       const TruncationSpec& trunc) {
    const FockGenerator g = build_generator(model, rates, trunc);
    OracleResult r = g.dim() <= 36 ? oracle_steady_state_dense(g) : oracle_steady_state_iterative(g);
    if (r.tail > trunc.tail_tol)
        throw Error(ErrorCode::TruncationInadequate,
                    "cutoff-shell population " + std::to_string(r.tail) + " > " + std::to_string(trunc.tail_tol));
    return r;
}

OracleResult oracle_adaptive(const ModelParams& model, const RateTable& rates, TruncationSpec trunc, int growth) {
    while (true) {
        const FockGenerator g = build_generator(model, rates, trunc);
        OracleResult r = g.dim() <= 36 ? oracle_steady_state_dense(g) : oracle_steady_state_iterative(g);
        if (r.tail <= trunc.tail_tol) return r;
        if (r.tail1 > trunc.tail_tol) trunc.n_max1 += growth;
        if (r.tail2 > trunc.tail_tol) trunc.n_max2 += growth;
        trunc.validate();    // throws DimensionTooLarge once the cap is hit
    }
}

TruncationSpec suggest_truncation(const ModelParams& model, double tail_tol) {
    const double T = std::max(model.T1(), model.T2());
    const GibbsSpec spec{model, T};
    TruncationSpec t;
    t.tail_tol = tail_tol;
    int* cut[2] = {&t.n_max1, &t.n_max2};
    for (int mode = 1; mode <= 2; ++mode) {
        const double n = std::max(gibbs_occupation(spec, mode), 1e-3);
        const double r = n / (n + 1.0);
        *cut[mode - 1] = std::max(2, static_cast<int>(std::ceil(std::log(tail_tol * (1.0 - r)) / std::log(r))));
    }
    return t;
}

} // namespace cosc
