// test_model.cpp — Parameter validation, critical coupling, normal modes and mode transforms

#include "doctest.h"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "cosc/covariance.hpp"
#include "cosc/errors.hpp"
#include "cosc/model.hpp"
#include "../support/moment_oracle.hpp"

using namespace cosc;

namespace {

ModelParams make(CouplingKind kind, double frac, double T1 = 98.0, double T2 = 98.0) {
    RawParams r;
    r.kind = kind;
    r.lambda = frac * critical_coupling(kind, r.omega1, r.omega2);
    r.T1 = T1;
    r.T2 = T2;
    return ModelParams::validate(r);
}

// Positive eigenfrequencies of the Heisenberg dynamical matrix i c h.
std::pair<double, double> dynamical_frequencies(const ModelParams& m) {
    const Eigen::Matrix4d a = ladder_commutators() * testing::hamiltonian_form(m);
    Eigen::EigenSolver<Eigen::Matrix4d> es(a);
    std::vector<double> w;
    for (int i = 0; i < 4; ++i) w.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(w.begin(), w.end());
    return {w[3], w[0]};
}

} // namespace

TEST_CASE("critical coupling for both kinds") {
    CHECK(critical_coupling(CouplingKind::PositionPosition, 5, 2) == doctest::Approx(1.5811388300841898).epsilon(1e-14));
    CHECK(critical_coupling(CouplingKind::RotatingWave, 5, 2) == doctest::Approx(3.1622776601683795).epsilon(1e-14));
}

TEST_CASE("validation rejects bad parameters") {
    auto code_of = [](RawParams r) {
        try {
            ModelParams::validate(r);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    RawParams r;
    r.omega1 = 0.0;
    CHECK(code_of(r) == ErrorCode::NonPositiveParameter);
    r = RawParams{};
    r.gamma2 = -1e-4;
    CHECK(code_of(r) == ErrorCode::NonPositiveParameter);
    r = RawParams{};
    r.T1 = 0.0;
    CHECK(code_of(r) == ErrorCode::NonPositiveParameter);
    r = RawParams{};
    r.lambda = -0.1;
    CHECK(code_of(r) == ErrorCode::NegativeCoupling);
    r = RawParams{};
    r.lambda = 1.6;
    CHECK(code_of(r) == ErrorCode::Supercritical);
    r.kind = CouplingKind::RotatingWave;
    CHECK_NOTHROW(ModelParams::validate(r));
}

TEST_CASE("normal modes match the dynamical matrix") {
    for (CouplingKind kind : {CouplingKind::PositionPosition, CouplingKind::RotatingWave}) {
        for (double f : {0.0, 0.2, 0.5, 0.9, 0.99}) {
            const ModelParams m = make(kind, f);
            const NormalModes nm = normal_mode_frequencies(m);
            const auto [wp, wm] = dynamical_frequencies(m);
            CHECK(nm.omega_plus == doctest::Approx(wp).epsilon(1e-12));
            CHECK(nm.omega_minus == doctest::Approx(wm).epsilon(1e-10));
        }
    }
    // frozen from an independent eigenvalue computation at half the critical coupling
    const NormalModes pp = normal_mode_frequencies(make(CouplingKind::PositionPosition, 0.5));
    CHECK(pp.omega_plus == doctest::Approx(5.111722151058).epsilon(1e-11));
    CHECK(pp.omega_minus == doctest::Approx(1.694194985941).epsilon(1e-11));
    const NormalModes rw = normal_mode_frequencies(make(CouplingKind::RotatingWave, 0.5));
    CHECK(rw.omega_plus == doctest::Approx(5.67944947177).epsilon(1e-11));
    CHECK(rw.omega_minus == doctest::Approx(1.32055052823).epsilon(1e-11));
}

TEST_CASE("lower mode vanishes at the critical coupling") {
    const NormalModes nm = normal_mode_frequencies(make(CouplingKind::PositionPosition, 1.0 - 1e-12));
    CHECK(nm.omega_minus < 1e-5);
}

TEST_CASE("rw rotation is orthogonal and reduces to identity at zero coupling") {
    const RwRotation r0 = rw_rotation(make(CouplingKind::RotatingWave, 0.0));
    CHECK(r0.c == doctest::Approx(1.0));
    CHECK(r0.s == doctest::Approx(0.0));
    const RwRotation r = rw_rotation(make(CouplingKind::RotatingWave, 0.7));
    CHECK(r.c * r.c + r.s * r.s == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("mode transform diagonalizes the Hamiltonian and preserves commutators") {
    const Eigen::Matrix4d c = ladder_commutators();
    for (CouplingKind kind : {CouplingKind::PositionPosition, CouplingKind::RotatingWave}) {
        for (double f : {0.0, 0.3, 0.8, 0.99}) {
            const ModelParams m = make(kind, f);
            const BogoliubovTransform bt = mode_transform(m);
            const NormalModes nm = normal_mode_frequencies(m);
            // X = S C: commutators of C must be canonical
            CHECK((bt.W * c * bt.W.transpose() - c).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((bt.S * bt.W - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
            // H = X^T h X / 2 = C^T (S^T h S) C / 2 with diagonal normal-mode form
            const Eigen::Matrix4d hc = bt.S.transpose() * testing::hamiltonian_form(m) * bt.S;
            Eigen::Matrix4d expect = Eigen::Matrix4d::Zero();
            expect(0, 2) = expect(2, 0) = nm.omega_plus;
            expect(1, 3) = expect(3, 1) = nm.omega_minus;
            CHECK((hc - expect).cwiseAbs().maxCoeff() < 1e-10 * std::max(1.0, nm.omega_plus));
        }
    }
}

TEST_CASE("bose occupation") {
    CHECK(bose_occupation(5.0, 1.0 / 98.0) == doctest::Approx(19.104251516232942).epsilon(1e-14));
    CHECK(bose_occupation(2.0, 1.0 / 98.0) == doctest::Approx(48.50170066846687).epsilon(1e-14));
    CHECK(bose_occupation(5.0, 1.0 / 1.96) == doctest::Approx(0.08460108821365141).epsilon(1e-14));
    CHECK_THROWS_AS(bose_occupation(0.0, 1.0), Error);
    CHECK(bose_occupation(1e-8, 1.0) == doctest::Approx(1e8 - 0.5).epsilon(1e-12));
}

TEST_CASE("coupling kind strings round trip") {
    CHECK(parse_coupling_kind("pp") == CouplingKind::PositionPosition);
    CHECK(parse_coupling_kind("rw") == CouplingKind::RotatingWave);
    CHECK(std::string(to_string(CouplingKind::RotatingWave)) == "rw");
    CHECK_THROWS_AS(parse_coupling_kind("xx"), Error);
}
