// sweep.cpp — Presets and the grid evaluation engine

#include "cosc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "cosc/errors.hpp"
#include "cosc/gibbs.hpp"
#include "cosc/lindblad_steady.hpp"
#include "cosc/observables.hpp"

namespace cosc {

namespace {

constexpr Method kAllMethods[] = {Method::LocalME, Method::GlobalME, Method::Langevin, Method::Gibbs};

struct MethodResult {
    std::optional<CovarianceMatrix> covariance;
    std::string status{"ok"};
    std::optional<double> residual;
    std::optional<double> quad_error;
};

struct GridPoint {
    CouplingKind kind;
    double deltaT;
    double lambda_frac;
};

struct PointResult {
    double lambda{0.0}, T1{0.0}, T2{0.0};
    std::string param_status{"ok"};
    std::map<Method, MethodResult> methods;
};

MethodResult evaluate(const ModelParams& m, Method method, const SweepConfig& cfg) {
    MethodResult r;
    try {
        switch (method) {
        case Method::LocalME:
        case Method::GlobalME: {
            const Basis b = method == Method::LocalME ? Basis::Local : Basis::Global;
            const SteadyStateSolution s = solve_steady_covariance(m, rates_for(m, b, cfg.rate_convention));
            r.covariance = s.covariance;
            r.residual = s.residual;
            break;
        }
        case Method::Langevin: {
            const LangevinResult l = steady_second_moments(m, cfg.quadrature);
            r.covariance = l.covariance;
            r.quad_error = l.quad_error;
            break;
        }
        case Method::Gibbs:
            if (m.T1() != m.T2()) {
                r.status = "NotApplicable";
                return r;
            }
            r.covariance = gibbs_second_moments({m, m.T1()});
            break;
        }
    } catch (const Error& e) {
        r.covariance.reset();
        r.status = to_string(e.code());
    }
    return r;
}

std::optional<double> observe(const CovarianceMatrix& c, Observable o, std::string& status) {
    try {
        switch (o) {
        case Observable::occupation1: return occupation_from_covariance(c, 1);
        case Observable::occupation2: return occupation_from_covariance(c, 2);
        case Observable::mutual_information: return gaussian_mutual_information(c);
        }
    } catch (const Error& e) {
        status = to_string(e.code());
    }
    return std::nullopt;
}

PointResult evaluate_point(const GridPoint& p, const SweepConfig& cfg) {
    PointResult out;
    const auto [T1, T2] = anchor_temperatures(cfg.temperature_anchor, cfg.base.T_ref, p.deltaT);
    out.T1 = T1;
    out.T2 = T2;
    out.lambda = p.lambda_frac * critical_coupling(p.kind, cfg.base.omega1, cfg.base.omega2);
    try {
        RawParams raw;
        raw.omega1 = cfg.base.omega1;
        raw.omega2 = cfg.base.omega2;
        raw.gamma1 = cfg.base.gamma1;
        raw.gamma2 = cfg.base.gamma2;
        raw.kind = p.kind;
        raw.lambda = out.lambda;
        raw.T1 = T1;
        raw.T2 = T2;
        const ModelParams m = ModelParams::validate(raw);
        for (Method method : cfg.methods) out.methods[method] = evaluate(m, method, cfg);
    } catch (const Error& e) {
        out.param_status = to_string(e.code());
    }
    return out;
}

} // namespace

const char* to_string(Method m) {
    switch (m) {
    case Method::LocalME: return "LocalME";
    case Method::GlobalME: return "GlobalME";
    case Method::Langevin: return "Langevin";
    case Method::Gibbs: return "Gibbs";
    }
    return "?";
}

const char* to_string(Observable o) {
    switch (o) {
    case Observable::occupation1: return "occupation1";
    case Observable::occupation2: return "occupation2";
    case Observable::mutual_information: return "mutual_information";
    }
    return "?";
}

const char* to_string(TemperatureAnchor a) {
    switch (a) {
    case TemperatureAnchor::equal: return "equal";
    case TemperatureAnchor::fixed_T2: return "fixed_T2";
    case TemperatureAnchor::sign_dependent: return "sign_dependent";
    }
    return "?";
}

Method parse_method(const std::string& s) {
    for (Method m : kAllMethods)
        if (s == to_string(m)) return m;
    throw Error(ErrorCode::ConfigInvalid, "unknown method '" + s + "'");
}

Observable parse_observable(const std::string& s) {
    for (Observable o : {Observable::occupation1, Observable::occupation2, Observable::mutual_information})
        if (s == to_string(o)) return o;
    throw Error(ErrorCode::ConfigInvalid, "unknown observable '" + s + "'");
}

TemperatureAnchor parse_anchor(const std::string& s) {
    for (auto a : {TemperatureAnchor::equal, TemperatureAnchor::fixed_T2, TemperatureAnchor::sign_dependent})
        if (s == to_string(a)) return a;
    throw Error(ErrorCode::ConfigInvalid, "unknown temperature anchor '" + s + "'");
}

void SweepConfig::validate() const {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::ConfigInvalid, msg); };
    if (name.empty() || name.find_first_of("/\\") != std::string::npos) fail("name must be a plain file stem");
    if (kind.empty()) fail("kind must be nonempty");
    if (methods.empty()) fail("methods must be nonempty");
    if (observables.empty()) fail("observables must be nonempty");
    for (double f : lambda_grid)
        if (!(f >= 0.0 && f < 1.0)) fail("lambda_grid entries must lie in [0, 1)");
    for (double d : deltaT_list)
        if (!std::isfinite(d)) fail("deltaT_list entries must be finite");
    if (temperature_anchor == TemperatureAnchor::equal)
        for (double d : deltaT_list)
            if (d != 0.0) fail("anchor 'equal' requires deltaT = 0");
    if (!(base.omega1 > 0 && base.omega2 > 0 && base.gamma1 > 0 && base.gamma2 > 0 && base.T_ref > 0))
        fail("base parameters must be positive");
    if (workers < 1) fail("workers must be >= 1");
    try {
        quadrature.validate();
    } catch (const Error& e) {
        fail(e.what());
    }
}

std::vector<double> default_lambda_grid() {
    std::vector<double> g;
    for (int i = 0; i < 60; ++i) g.push_back(0.95 * i / 59.0);
    for (int i = 1; i <= 8; ++i) g.push_back(0.95 + 0.005 * i);
    return g;
}

std::vector<std::string> preset_ids() { return {"fig2", "fig3a", "fig3b", "fig4a", "fig4b", "fig5", "figS1"}; }

SweepConfig preset(const std::string& id) {
    SweepConfig c;
    c.name = id;
    c.lambda_grid = default_lambda_grid();
    c.observables = {Observable::occupation1};
    const std::vector<double> high{-60.0, -30.0, -10.0, 10.0, 30.0, 60.0};
    const std::vector<double> low{-1.2, -0.6, -0.2, 0.2, 0.6, 1.2};
    const std::vector<Method> ratio_methods{Method::LocalME, Method::GlobalME, Method::Langevin};
    const CouplingKind pp = CouplingKind::PositionPosition, rw = CouplingKind::RotatingWave;

    if (id == "fig2" || id == "fig5") {
        c.kind = {pp, rw};
        c.methods = {Method::LocalME, Method::GlobalME, Method::Langevin, Method::Gibbs};
        c.deltaT_list = {0.0};
        c.temperature_anchor = TemperatureAnchor::equal;
        if (id == "fig5") c.observables = {Observable::mutual_information, Observable::occupation1};
    } else if (id == "fig3a" || id == "fig4a") {
        c.kind = {id == "fig3a" ? pp : rw};
        c.methods = ratio_methods;
        c.deltaT_list = high;
        c.temperature_anchor = TemperatureAnchor::sign_dependent;
        c.legend_unverified = true;
    } else if (id == "fig3b" || id == "fig4b") {
        c.kind = {id == "fig3b" ? pp : rw};
        c.methods = ratio_methods;
        c.deltaT_list = low;
        c.base.T_ref = 1.96;
        c.temperature_anchor = TemperatureAnchor::fixed_T2;
        c.legend_unverified = true;
    } else if (id == "figS1") {
        c.kind = {pp, rw};
        c.methods = ratio_methods;
        c.deltaT_list = high;
        c.temperature_anchor = TemperatureAnchor::sign_dependent;
        c.legend_unverified = true;
    } else {
        throw Error(ErrorCode::UnknownPreset, "unknown preset '" + id + "'");
    }
    return c;
}

std::pair<double, double> anchor_temperatures(TemperatureAnchor anchor, double T_ref, double deltaT) {
    switch (anchor) {
    case TemperatureAnchor::equal: return {T_ref, T_ref};
    case TemperatureAnchor::fixed_T2: return {T_ref - deltaT, T_ref};
    case TemperatureAnchor::sign_dependent:
        if (deltaT >= 0.0) return {T_ref, T_ref + deltaT};
        return {T_ref - deltaT, T_ref};
    }
    return {T_ref, T_ref};
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<GridPoint> points;
    for (CouplingKind k : cfg.kind)
        for (double d : cfg.deltaT_list)
            for (double f : cfg.lambda_grid) points.push_back({k, d, f});

    std::vector<PointResult> results(points.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next++; i < points.size(); i = next++) results[i] = evaluate_point(points[i], cfg);
    };
    const int nthreads = std::min<int>(cfg.workers, static_cast<int>(std::max<size_t>(points.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    const bool has_langevin =
        std::find(cfg.methods.begin(), cfg.methods.end(), Method::Langevin) != cfg.methods.end();
    std::vector<SweepRow> rows;
    for (CouplingKind k : cfg.kind) {
        for (Method method : cfg.methods) {
            for (size_t i = 0; i < points.size(); ++i) {
                if (points[i].kind != k) continue;
                const PointResult& pr = results[i];
                for (Observable o : cfg.observables) {
                    SweepRow row;
                    row.kind = k;
                    row.method = method;
                    row.lambda_frac = points[i].lambda_frac;
                    row.lambda = pr.lambda;
                    row.T1 = pr.T1;
                    row.T2 = pr.T2;
                    row.deltaT = points[i].deltaT;
                    row.observable = o;
                    if (pr.param_status != "ok") {
                        row.status = pr.param_status;
                        rows.push_back(row);
                        continue;
                    }
                    const MethodResult& mr = pr.methods.at(method);
                    row.status = mr.status;
                    row.diag_residual = mr.residual;
                    row.diag_quad_error = mr.quad_error;
                    if (mr.covariance) row.value = observe(*mr.covariance, o, row.status);
                    if (has_langevin && row.value) {
                        const MethodResult& lr = pr.methods.at(Method::Langevin);
                        std::string ls = lr.status;
                        if (lr.covariance) {
                            const auto lv = observe(*lr.covariance, o, ls);
                            if (lv && *lv != 0.0) row.ratio_to_langevin = *row.value / *lv;
                        }
                    }
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

} // namespace cosc
