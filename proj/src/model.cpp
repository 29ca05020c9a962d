// model.cpp — Parameter validation, normal modes and mode transforms

#include "cosc/model.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "cosc/errors.hpp"

namespace cosc {

const char* to_string(CouplingKind kind) {
    return kind == CouplingKind::PositionPosition ? "pp" : "rw";
}

CouplingKind parse_coupling_kind(const char* text) {
    if (std::strcmp(text, "pp") == 0) return CouplingKind::PositionPosition;
    if (std::strcmp(text, "rw") == 0) return CouplingKind::RotatingWave;
    throw Error(ErrorCode::InvalidArgument, std::string("unknown coupling kind '") + text + "'");
}

double critical_coupling(CouplingKind kind, double omega1, double omega2) {
    const double r = std::sqrt(omega1 * omega2);
    return kind == CouplingKind::PositionPosition ? 0.5 * r : r;
}

ModelParams ModelParams::validate(const RawParams& raw) {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw Error(ErrorCode::NonPositiveParameter, std::string(name) + " must be positive and finite");
    };
    positive(raw.omega1, "omega1");
    positive(raw.omega2, "omega2");
    positive(raw.gamma1, "gamma1");
    positive(raw.gamma2, "gamma2");
    positive(raw.T1, "T1");
    positive(raw.T2, "T2");
    if (!std::isfinite(raw.lambda)) throw Error(ErrorCode::InvalidArgument, "lambda must be finite");
    if (raw.lambda < 0.0) throw Error(ErrorCode::NegativeCoupling, "lambda must be >= 0");
    const double lc = critical_coupling(raw.kind, raw.omega1, raw.omega2);
    if (raw.lambda >= lc)
        throw Error(ErrorCode::Supercritical,
                    "lambda=" + std::to_string(raw.lambda) + " >= lambda_c=" + std::to_string(lc));
    return ModelParams(raw);
}

double ModelParams::lambda_c() const { return critical_coupling(raw_.kind, raw_.omega1, raw_.omega2); }

ModelParams ModelParams::with_lambda(double lambda) const {
    RawParams r = raw_;
    r.lambda = lambda;
    return validate(r);
}

ModelParams ModelParams::with_temperatures(double T1, double T2) const {
    RawParams r = raw_;
    r.T1 = T1;
    r.T2 = T2;
    return validate(r);
}

NormalModes normal_mode_frequencies(const ModelParams& m) {
    const double w1 = m.omega1(), w2 = m.omega2(), l = m.lambda();
    NormalModes out;
    out.kind = m.kind();
    if (m.kind() == CouplingKind::PositionPosition) {
        const double d = w1 * w1 - w2 * w2;
        const double wp2 = 0.5 * (w1 * w1 + w2 * w2 + std::sqrt(d * d + 16.0 * l * l * w1 * w2));
        // product identity w+^2 w-^2 = w1 w2 (w1 w2 - 4 l^2) avoids cancellation near lambda_c
        const double wm2 = w1 * w2 * (w1 * w2 - 4.0 * l * l) / wp2;
        if (wm2 < 0.0) throw Error(ErrorCode::Supercritical, "negative lower normal-mode frequency squared");
        out.omega_plus = std::sqrt(wp2);
        out.omega_minus = std::sqrt(wm2);
    } else {
        const double half = 0.5 * (w1 - w2);
        const double wp = 0.5 * (w1 + w2) + std::sqrt(half * half + l * l);
        const double wm = (w1 * w2 - l * l) / wp;
        if (wm < 0.0) throw Error(ErrorCode::Supercritical, "negative lower normal-mode frequency");
        out.omega_plus = wp;
        out.omega_minus = wm;
    }
    return out;
}

RwRotation rw_rotation(const ModelParams& m) {
    if (m.kind() != CouplingKind::RotatingWave)
        throw Error(ErrorCode::InvalidArgument, "rw_rotation requires rotating-wave coupling");
    // theta = 0 for the degenerate decoupled case (atan2(0, 0) = 0)
    const double theta = 0.5 * std::atan2(2.0 * m.lambda(), m.omega1() - m.omega2());
    return {std::cos(theta), std::sin(theta)};
}

double pp_mixing_angle(const ModelParams& m) {
    const double w1 = m.omega1(), w2 = m.omega2();
    return 0.5 * std::atan2(4.0 * m.lambda() * std::sqrt(w1 * w2), w1 * w1 - w2 * w2);
}

BogoliubovTransform pp_bogoliubov(const ModelParams& m) {
    if (m.kind() != CouplingKind::PositionPosition)
        throw Error(ErrorCode::InvalidArgument, "pp_bogoliubov requires position-position coupling");
    const NormalModes nm = normal_mode_frequencies(m);
    const double wp = nm.omega_plus, wm = nm.omega_minus;
    if (!(wm > 0.0)) throw Error(ErrorCode::Supercritical, "lower normal mode has zero frequency");
    const double w1 = m.omega1(), w2 = m.omega2();
    const double theta = pp_mixing_angle(m);
    const double c = std::cos(theta), s = std::sin(theta);

    Eigen::Matrix2d A, B;
    A << c * (wp + w1) / (2.0 * std::sqrt(wp * w1)), -s * (wm + w1) / (2.0 * std::sqrt(wm * w1)),
         s * (wp + w2) / (2.0 * std::sqrt(wp * w2)), c * (wm + w2) / (2.0 * std::sqrt(wm * w2));
    B << c * (w1 - wp) / (2.0 * std::sqrt(wp * w1)), -s * (w1 - wm) / (2.0 * std::sqrt(wm * w1)),
         s * (w2 - wp) / (2.0 * std::sqrt(wp * w2)), c * (w2 - wm) / (2.0 * std::sqrt(wm * w2));

    BogoliubovTransform t;
    t.S << A, B, B, A;
    t.W = t.S.fullPivLu().inverse();
    const double res = (t.S * t.W - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
    if (!(res <= 1e-8)) throw Error(ErrorCode::SingularTransform, "S*W residual " + std::to_string(res));
    return t;
}

BogoliubovTransform mode_transform(const ModelParams& m) {
    if (m.kind() == CouplingKind::PositionPosition) return pp_bogoliubov(m);
    const RwRotation r = rw_rotation(m);
    // a1 = c d+ - s d-, a2 = s d+ + c d-
    Eigen::Matrix2d R;
    R << r.c, -r.s, r.s, r.c;
    BogoliubovTransform t;
    t.S.setZero();
    t.S.topLeftCorner<2, 2>() = R;
    t.S.bottomRightCorner<2, 2>() = R;
    t.W = t.S.transpose();
    return t;
}

double bose_occupation(double omega, double beta) {
    if (omega == 0.0) throw Error(ErrorCode::ZeroFrequency, "Bose occupation has a pole at omega = 0");
    return 1.0 / std::expm1(beta * omega);
}

} // namespace cosc
