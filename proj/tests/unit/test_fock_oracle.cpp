// test_fock_oracle.cpp — Truncated Fock-space steady states

#include "doctest.h"

#include <cmath>

#include "cosc/errors.hpp"
#include "cosc/fock_oracle.hpp"
#include "cosc/gibbs.hpp"
#include "cosc/lindblad_steady.hpp"

using namespace cosc;

namespace {

ModelParams make(CouplingKind kind, double frac, double T1 = 1.96, double T2 = 1.96) {
    RawParams r;
    r.kind = kind;
    r.lambda = frac * critical_coupling(kind, r.omega1, r.omega2);
    r.T1 = T1;
    r.T2 = T2;
    return ModelParams::validate(r);
}

} // namespace

TEST_CASE("generator is trace preserving and Hermiticity preserving") {
    const ModelParams m = make(CouplingKind::PositionPosition, 0.4, 1.96, 1.46);
    const FockGenerator gen = build_generator(m, global_pp_rates(m), {4, 3});
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Random(gen.dim(), gen.dim());
    rho = (rho + rho.adjoint()).eval();
    const Eigen::MatrixXcd out = gen.apply(rho);
    CHECK(std::abs(out.trace()) < 1e-12);
    CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dense superoperator matches the matrix-free action") {
    const ModelParams m = make(CouplingKind::RotatingWave, 0.5);
    const FockGenerator gen = build_generator(m, local_rates(m), {3, 2});
    const Eigen::MatrixXcd L = gen.dense_superoperator();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Random(gen.dim(), gen.dim());
    const Eigen::MatrixXcd direct = gen.apply(rho);
    const Eigen::VectorXcd vec = L * Eigen::Map<Eigen::VectorXcd>(rho.data(), rho.size());
    CHECK((Eigen::Map<const Eigen::VectorXcd>(direct.data(), direct.size()) - vec).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dense and iterative routes agree") {
    for (CouplingKind kind : {CouplingKind::PositionPosition, CouplingKind::RotatingWave}) {
        const ModelParams m = make(kind, 0.5, 1.46, 1.96);
        const FockGenerator gen = build_generator(m, rates_for(m, Basis::Global), {5, 5});
        const OracleResult d = oracle_steady_state_dense(gen);
        const OracleResult g = oracle_steady_state_iterative(gen);
        CHECK(d.method == "dense");
        CHECK(g.method == "gmres");
        CHECK(g.n1 == doctest::Approx(d.n1).epsilon(1e-9));
        CHECK(g.n2 == doctest::Approx(d.n2).epsilon(1e-9));
        CHECK(g.residual < 1e-10);
    }
}

TEST_CASE("cold baths with minimal cutoff give the vacuum") {
    const ModelParams m = make(CouplingKind::RotatingWave, 0.0, 0.01, 0.01);
    const OracleResult r = oracle_steady_occupations(m, local_rates(m), {1, 1, 1e-4});
    CHECK(r.n1 < 1e-12);
    CHECK(r.n2 < 1e-12);
    CHECK(std::abs(r.rho(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("inadequate truncation is reported") {
    const ModelParams m = make(CouplingKind::PositionPosition, 0.5, 98.0, 98.0);
    CHECK_THROWS_AS(oracle_steady_occupations(m, local_rates(m), {3, 3, 1e-8}), Error);
}

TEST_CASE("global steady state at equal temperature is the Gibbs state") {
    for (CouplingKind kind : {CouplingKind::PositionPosition, CouplingKind::RotatingWave}) {
        const ModelParams m = make(kind, 0.5);
        const OracleResult r = oracle_adaptive(m, rates_for(m, Basis::Global), suggest_truncation(m, 1e-10));
        CHECK(r.n1 == doctest::Approx(gibbs_occupation({m, 1.96}, 1)).epsilon(1e-7));
        CHECK(r.n2 == doctest::Approx(gibbs_occupation({m, 1.96}, 2)).epsilon(1e-7));
    }
}

TEST_CASE("truncation spec validation") {
    CHECK_THROWS_AS((TruncationSpec{0, 3}.validate()), Error);
    CHECK_THROWS_AS((TruncationSpec{3, 3, 0.0}.validate()), Error);
    CHECK_THROWS_AS((TruncationSpec{100, 100, 1e-8, 4096}.validate()), Error);
}
