// dissipators.hpp — Lindblad coefficient tables for local and global master equations

#pragma once

#include <Eigen/Dense>

#include "cosc/covariance.hpp"
#include "cosc/model.hpp"

namespace cosc {

enum class Basis { Local, Global };

const char* to_string(Basis basis);

struct Scheme {
    Basis basis{Basis::Local};
    CouplingKind kind{CouplingKind::PositionPosition};
};

// Global-rw rate magnitudes: flat (gamma, gamma e^{-beta w}) or bose (gamma (N+1), gamma N).
enum class RateConvention { Flat, Bose };

const char* to_string(RateConvention convention);
RateConvention parse_rate_convention(const char* text);

// Gamma(A_i, A_j) for D(A_i, A_j) rho = Gamma (A_i rho A_j - {A_j A_i, rho}/2),
// indexed in the ladder order (a1, a2, a1', a2').
class RateTable {
public:
    explicit RateTable(Scheme scheme) : scheme_(scheme) { gamma_.setZero(); }

    double operator()(Op i, Op j) const { return gamma_(idx(i), idx(j)); }
    double at(int i, int j) const { return gamma_(i, j); }
    void set(Op i, Op j, double value) { gamma_(idx(i), idx(j)) = value; }
    void add(int i, int j, double value) { gamma_(i, j) += value; }

    const Eigen::Matrix4d& matrix() const { return gamma_; }
    const Scheme& scheme() const { return scheme_; }

private:
    Scheme scheme_;
    Eigen::Matrix4d gamma_;
};

RateTable local_rates(const ModelParams& model);
RateTable global_rw_rates(const ModelParams& model, RateConvention convention = RateConvention::Bose);
RateTable global_pp_rates(const ModelParams& model);

// Dispatch on basis and the model's coupling kind.
RateTable rates_for(const ModelParams& model, Basis basis, RateConvention convention = RateConvention::Bose);

} // namespace cosc
