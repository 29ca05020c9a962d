// dissipators.cpp — Local, global-rw and global-pp rate tables

#include "cosc/dissipators.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "cosc/errors.hpp"

namespace cosc {

const char* to_string(Basis basis) { return basis == Basis::Local ? "local" : "global"; }

const char* to_string(RateConvention convention) {
    return convention == RateConvention::Flat ? "flat" : "bose";
}

RateConvention parse_rate_convention(const char* text) {
    if (std::strcmp(text, "flat") == 0) return RateConvention::Flat;
    if (std::strcmp(text, "bose") == 0) return RateConvention::Bose;
    throw Error(ErrorCode::InvalidArgument, std::string("unknown rate convention '") + text + "'");
}

RateTable local_rates(const ModelParams& m) {
    RateTable t({Basis::Local, m.kind()});
    const double n1 = bose_occupation(m.omega1(), m.beta1());
    const double n2 = bose_occupation(m.omega2(), m.beta2());
    t.set(Op::a1, Op::a1d, m.gamma1() * (n1 + 1.0));
    t.set(Op::a1d, Op::a1, m.gamma1() * n1);
    t.set(Op::a2, Op::a2d, m.gamma2() * (n2 + 1.0));
    t.set(Op::a2d, Op::a2, m.gamma2() * n2);
    return t;
}

RateTable global_rw_rates(const ModelParams& m, RateConvention convention) {
    if (m.kind() != CouplingKind::RotatingWave)
        throw Error(ErrorCode::InvalidArgument, "global_rw_rates requires rotating-wave coupling");
    const NormalModes nm = normal_mode_frequencies(m);
    const RwRotation r = rw_rotation(m);
    const double c = r.c, s = r.s, c2 = c * c, s2 = s * s, cs = c * s;

    // down (g) and up (gu) rates per bath j and normal mode +/-
    double gp[2], gm[2], gup[2], gum[2];
    const double gam[2] = {m.gamma1(), m.gamma2()};
    const double beta[2] = {m.beta1(), m.beta2()};
    for (int j = 0; j < 2; ++j) {
        if (convention == RateConvention::Flat) {
            gp[j] = gam[j];
            gm[j] = gam[j];
            gup[j] = gam[j] * std::exp(-beta[j] * nm.omega_plus);
            gum[j] = gam[j] * std::exp(-beta[j] * nm.omega_minus);
        } else {
            const double np = bose_occupation(nm.omega_plus, beta[j]);
            const double nmn = bose_occupation(nm.omega_minus, beta[j]);
            gp[j] = gam[j] * (np + 1.0);
            gm[j] = gam[j] * (nmn + 1.0);
            gup[j] = gam[j] * np;
            gum[j] = gam[j] * nmn;
        }
    }

    RateTable t({Basis::Global, CouplingKind::RotatingWave});
    t.set(Op::a1, Op::a1d, c2 * (c2 * gp[0] + s2 * gp[1]) + s2 * (s2 * gm[0] + c2 * gm[1]));
    t.set(Op::a1d, Op::a1, c2 * (c2 * gup[0] + s2 * gup[1]) + s2 * (s2 * gum[0] + c2 * gum[1]));
    t.set(Op::a2, Op::a2d, s2 * (c2 * gp[0] + s2 * gp[1]) + c2 * (s2 * gm[0] + c2 * gm[1]));
    t.set(Op::a2d, Op::a2, s2 * (c2 * gup[0] + s2 * gup[1]) + c2 * (s2 * gum[0] + c2 * gum[1]));
    const double x_down = cs * (c2 * gp[0] + s2 * gp[1]) - cs * (s2 * gm[0] + c2 * gm[1]);
    const double x_up = cs * (c2 * gup[0] + s2 * gup[1]) - cs * (s2 * gum[0] + c2 * gum[1]);
    t.set(Op::a1, Op::a2d, x_down);
    t.set(Op::a2, Op::a1d, x_down);
    t.set(Op::a1d, Op::a2, x_up);
    t.set(Op::a2d, Op::a1, x_up);
    return t;
}

RateTable global_pp_rates(const ModelParams& m) {
    if (m.kind() != CouplingKind::PositionPosition)
        throw Error(ErrorCode::InvalidArgument, "global_pp_rates requires position-position coupling");
    const NormalModes nm = normal_mode_frequencies(m);
    const BogoliubovTransform bt = pp_bogoliubov(m);
    const Eigen::Matrix4d& S = bt.S;
    const Eigen::Matrix4d& W = bt.W;
    const double gam[2] = {m.gamma1(), m.gamma2()};
    const double beta[2] = {m.beta1(), m.beta2()};
    const double freq[2] = {nm.omega_plus, nm.omega_minus};

    RateTable t({Basis::Global, CouplingKind::PositionPosition});
    for (int b = 0; b < 2; ++b) {
        // bath b couples through x_b ~ a_b + a_b': index pairs (b, b+2) and (b+2, b)
        const int pairs[2][2] = {{b, b + 2}, {b + 2, b}};
        for (int mode = 0; mode < 2; ++mode) {
            const double n = bose_occupation(freq[mode], beta[b]);
            double weight = 0.0;
            for (const auto& kl : pairs) weight += S(kl[0], mode) * S(kl[1], mode + 2);
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    const double up = n * W(mode + 2, i) * W(mode, j);
                    const double down = (n + 1.0) * W(mode, i) * W(mode + 2, j);
                    t.add(i, j, gam[b] * weight * (up + down));
                }
            }
        }
    }
    return t;
}

RateTable rates_for(const ModelParams& m, Basis basis, RateConvention convention) {
    if (basis == Basis::Local) return local_rates(m);
    if (m.kind() == CouplingKind::RotatingWave) return global_rw_rates(m, convention);
    return global_pp_rates(m);
}

} // namespace cosc
