// fock_oracle.hpp — Truncated number-basis Lindblad generator and its steady state

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "cosc/dissipators.hpp"
#include "cosc/model.hpp"

namespace cosc {

struct TruncationSpec {
    int n_max1{10};
    int n_max2{10};
    double tail_tol{1e-8};    // max population allowed on a cutoff shell
    int max_dim{4096};        // cap on (n_max1 + 1)(n_max2 + 1)

    void validate() const;
};

using SparseC = Eigen::SparseMatrix<std::complex<double>>;

// L(rho) = -i[H, rho] + sum_ij Gamma_ij (A_i rho A_j - {A_j A_i, rho}/2) on |n1, n2>,
// basis index n1 (n_max2 + 1) + n2. Truncated operators are used consistently, so
// the generator is exactly trace preserving.
class FockGenerator {
public:
    FockGenerator(const ModelParams& model, const RateTable& rates, const TruncationSpec& trunc);

    int dim() const { return dim_; }
    int n_max1() const { return n1_; }
    int n_max2() const { return n2_; }
    int n_of(int mode, int index) const;    // occupation of mode 1|2 in basis state index

    Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;
    // Column-major vectorized superoperator, dim^2 x dim^2.
    Eigen::MatrixXcd dense_superoperator() const;

    const SparseC& hamiltonian() const { return H_; }
    const SparseC& anticommutator_part() const { return K_; }    // sum Gamma_ij A_j A_i
    const SparseC& ladder(Op op) const { return A_[idx(op)]; }
    const Eigen::Matrix4d& rates() const { return gamma_; }
    bool conserves_excitations() const { return number_conserving_; }

private:
    int n1_, n2_, dim_;
    SparseC H_, K_;
    SparseC A_[4];
    SparseC B_[4];    // B_i = sum_j Gamma_ij A_j
    Eigen::Matrix4d gamma_;
    bool number_conserving_;
};

FockGenerator build_generator(const ModelParams& model, const RateTable& rates, const TruncationSpec& trunc);

struct OracleResult {
    double n1{0.0};
    double n2{0.0};
    double tail{0.0};              // max cutoff-shell population over both modes
    double tail1{0.0};
    double tail2{0.0};
    double hermiticity_error{0.0};
    double min_eigenvalue{0.0};
    double residual{0.0};          // ||L(rho)||_max
    int iterations{0};
    int n_max1{0};
    int n_max2{0};
    std::string method;            // "dense" or "gmres"
    Eigen::MatrixXcd rho;
};

// Dense null-space solve of the full superoperator; small dimensions only.
OracleResult oracle_steady_state_dense(const FockGenerator& gen);
// Preconditioned GMRES on symmetry sectors of rho.
OracleResult oracle_steady_state_iterative(const FockGenerator& gen);

// Picks the dense route for dim <= 36, GMRES otherwise. Throws TruncationInadequate if tail > tail_tol.
OracleResult oracle_steady_occupations(const ModelParams& model, const RateTable& rates,
                                       const TruncationSpec& trunc);

// Grows each mode's cutoff until its shell population is <= trunc.tail_tol.
OracleResult oracle_adaptive(const ModelParams& model, const RateTable& rates, TruncationSpec trunc,
                             int growth = 4);

// Initial cutoffs from thermal tails at the hotter bath temperature.
TruncationSpec suggest_truncation(const ModelParams& model, double tail_tol);

} // namespace cosc
