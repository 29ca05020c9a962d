// sweep_io.cpp — CSV rows, run manifests and JSON sweep configs

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cosc/errors.hpp"
#include "cosc/sweep.hpp"

#ifndef COSC_VERSION
#define COSC_VERSION "0.0.0"
#endif

namespace cosc {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

template <typename T, typename F>
ordered_json names(const std::vector<T>& items, F f) {
    ordered_json a = ordered_json::array();
    for (const auto& x : items) a.push_back(f(x));
    return a;
}

ordered_json config_json(const SweepConfig& c) {
    ordered_json j;
    j["name"] = c.name;
    j["base"] = {{"omega1", c.base.omega1},
                 {"omega2", c.base.omega2},
                 {"gamma1", c.base.gamma1},
                 {"gamma2", c.base.gamma2},
                 {"T_ref", c.base.T_ref}};
    j["kind"] = names(c.kind, [](CouplingKind k) { return std::string(to_string(k)); });
    j["methods"] = names(c.methods, [](Method m) { return std::string(to_string(m)); });
    j["lambda_grid"] = c.lambda_grid;
    j["deltaT_list"] = c.deltaT_list;
    j["temperature_anchor"] = to_string(c.temperature_anchor);
    j["observables"] = names(c.observables, [](Observable o) { return std::string(to_string(o)); });
    j["quadrature"] = {{"rel_tol", c.quadrature.rel_tol},
                       {"abs_tol", c.quadrature.abs_tol},
                       {"window_factor", c.quadrature.window_factor},
                       {"max_subdivisions", c.quadrature.max_subdivisions}};
    j["output_path"] = c.output_path;
    j["rate_convention"] = to_string(c.rate_convention);
    j["workers"] = c.workers;
    j["legend_unverified"] = c.legend_unverified;
    return j;
}

template <typename T>
void read(const ordered_json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

} // namespace

std::string version() { return COSC_VERSION; }

std::string format_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "kind,method,lambda_frac,lambda,T1,T2,deltaT,observable,value,ratio_to_langevin,status,diag_residual,"
          "diag_quad_error\r\n";
    for (const SweepRow& r : rows) {
        os << quote(to_string(r.kind)) << ',' << quote(to_string(r.method)) << ',' << fmt(r.lambda_frac) << ','
           << fmt(r.lambda) << ',' << fmt(r.T1) << ',' << fmt(r.T2) << ',' << fmt(r.deltaT) << ','
           << quote(to_string(r.observable)) << ',' << fmt(r.value) << ',' << fmt(r.ratio_to_langevin) << ','
           << quote(r.status) << ',' << fmt(r.diag_residual) << ',' << fmt(r.diag_quad_error) << "\r\n";
    }
    return os.str();
}

std::string config_to_text(const SweepConfig& c) { return config_json(c).dump(2) + "\n"; }

std::string format_manifest(const SweepConfig& c, const std::vector<SweepRow>& rows) {
    ordered_json j;
    j["code_version"] = version();
    j["config"] = config_json(c);
    j["tolerances"] = {{"steady_residual", "1e-9 * max(1, ||G||_inf)"},
                       {"symplectic_floor", "1/2 - 1e-9"},
                       {"quad_rel_tol", c.quadrature.rel_tol},
                       {"quad_abs_tol", c.quadrature.abs_tol},
                       {"near_critical_refusal", "lambda > (1 - 1e-6) lambda_c"}};
    j["deltaT_source"] = c.legend_unverified ? "legend-unverified" : "preset";
    size_t errors = 0;
    for (const auto& r : rows) errors += r.status != "ok";
    j["rows"] = rows.size();
    j["error_rows"] = errors;
    return j.dump(2) + "\n";
}

SweepConfig config_from_text(const std::string& text) {
    SweepConfig c;
    try {
        const ordered_json j = ordered_json::parse(text);
        if (!j.is_object()) throw Error(ErrorCode::ConfigInvalid, "config must be an object");
        static const char* known[] = {"preset", "name",        "base",        "kind",       "methods",
                                      "lambda_grid", "deltaT_list", "temperature_anchor",
                                      "observables", "quadrature",  "output_path", "rate_convention",
                                      "workers",     "legend_unverified"};
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known))
                throw Error(ErrorCode::ConfigInvalid, "unknown field '" + it.key() + "'");
        }
        if (j.contains("preset")) c = preset(j.at("preset").get<std::string>());
        read(j, "name", c.name);
        if (j.contains("base")) {
            const auto& b = j.at("base");
            read(b, "omega1", c.base.omega1);
            read(b, "omega2", c.base.omega2);
            read(b, "gamma1", c.base.gamma1);
            read(b, "gamma2", c.base.gamma2);
            read(b, "T_ref", c.base.T_ref);
        }
        if (j.contains("kind")) {
            c.kind.clear();
            for (const auto& k : j.at("kind")) c.kind.push_back(parse_coupling_kind(k.get<std::string>().c_str()));
        }
        if (j.contains("methods")) {
            c.methods.clear();
            for (const auto& m : j.at("methods")) c.methods.push_back(parse_method(m.get<std::string>()));
        }
        read(j, "lambda_grid", c.lambda_grid);
        read(j, "deltaT_list", c.deltaT_list);
        if (j.contains("temperature_anchor"))
            c.temperature_anchor = parse_anchor(j.at("temperature_anchor").get<std::string>());
        if (j.contains("observables")) {
            c.observables.clear();
            for (const auto& o : j.at("observables")) c.observables.push_back(parse_observable(o.get<std::string>()));
        }
        if (j.contains("quadrature")) {
            const auto& q = j.at("quadrature");
            read(q, "rel_tol", c.quadrature.rel_tol);
            read(q, "abs_tol", c.quadrature.abs_tol);
            read(q, "window_factor", c.quadrature.window_factor);
            read(q, "max_subdivisions", c.quadrature.max_subdivisions);
        }
        read(j, "output_path", c.output_path);
        if (j.contains("rate_convention"))
            c.rate_convention = parse_rate_convention(j.at("rate_convention").get<std::string>().c_str());
        read(j, "workers", c.workers);
        read(j, "legend_unverified", c.legend_unverified);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigInvalid) throw;
        throw Error(ErrorCode::ConfigInvalid, e.what());
    } catch (const std::exception& e) {
        throw Error(ErrorCode::ConfigInvalid, e.what());
    }
    c.validate();
    return c;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigInvalid, "cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_text(ss.str());
}

std::vector<std::string> write_output(const std::vector<SweepRow>& rows, const SweepConfig& c) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(c.output_path, ec);
    if (ec) throw Error(ErrorCode::OutputUnwritable, "cannot create '" + c.output_path + "': " + ec.message());

    auto write = [](const fs::path& p, const std::string& content) {
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::OutputUnwritable, "cannot open '" + p.string() + "'");
        out << content;
        if (!out) throw Error(ErrorCode::OutputUnwritable, "write failed for '" + p.string() + "'");
    };

    std::vector<std::string> written;
    for (CouplingKind k : c.kind) {
        std::vector<SweepRow> subset;
        for (const auto& r : rows)
            if (r.kind == k) subset.push_back(r);
        const fs::path p = fs::path(c.output_path) / (c.name + "_" + to_string(k) + ".csv");
        write(p, format_csv(subset));
        written.push_back(p.string());
    }
    const fs::path mp = fs::path(c.output_path) / (c.name + ".manifest");
    write(mp, format_manifest(c, rows));
    written.push_back(mp.string());
    return written;
}

} // namespace cosc
