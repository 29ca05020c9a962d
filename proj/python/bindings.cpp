// bindings.cpp — Python module exposing models, solvers, observables and sweeps

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cosc/covariance.hpp"
#include "cosc/dissipators.hpp"
#include "cosc/errors.hpp"
#include "cosc/fock_oracle.hpp"
#include "cosc/gibbs.hpp"
#include "cosc/langevin.hpp"
#include "cosc/lindblad_steady.hpp"
#include "cosc/model.hpp"
#include "cosc/observables.hpp"
#include "cosc/sweep.hpp"

namespace py = pybind11;
using namespace cosc;

namespace {

CovarianceMatrix as_cov(const Eigen::Matrix4d& s) { return CovarianceMatrix::from_matrix(s); }

py::dict row_to_dict(const SweepRow& r) {
    py::dict d;
    auto opt = [](const std::optional<double>& v) { return v ? py::cast(*v) : py::none(); };
    d["kind"] = to_string(r.kind);
    d["method"] = to_string(r.method);
    d["lambda_frac"] = r.lambda_frac;
    d["lambda"] = r.lambda;
    d["T1"] = r.T1;
    d["T2"] = r.T2;
    d["deltaT"] = r.deltaT;
    d["observable"] = to_string(r.observable);
    d["value"] = opt(r.value);
    d["ratio_to_langevin"] = opt(r.ratio_to_langevin);
    d["status"] = r.status;
    d["diag_residual"] = opt(r.diag_residual);
    d["diag_quad_error"] = opt(r.diag_quad_error);
    return d;
}

} // namespace

PYBIND11_MODULE(_cosc, m) {
    m.doc() = "Coupled-oscillator steady states";
    m.attr("__version__") = version();

    // CoscError(message, code_name)
    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::object(py::exception<Error>(m, "CoscError", PyExc_RuntimeError)); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetObject(error_type.get_stored().ptr(), py::make_tuple(e.what(), to_string(e.code())).ptr());
        }
    });

    py::enum_<CouplingKind>(m, "CouplingKind")
        .value("pp", CouplingKind::PositionPosition)
        .value("rw", CouplingKind::RotatingWave);
    py::enum_<Basis>(m, "Basis").value("local", Basis::Local).value("global_", Basis::Global);
    py::enum_<RateConvention>(m, "RateConvention")
        .value("flat", RateConvention::Flat)
        .value("bose", RateConvention::Bose);

    py::class_<ModelParams>(m, "Model")
        .def(py::init([](double omega1, double omega2, double lam, CouplingKind kind, double gamma1, double gamma2,
                         double T1, double T2) {
                 return ModelParams::validate({omega1, omega2, lam, kind, gamma1, gamma2, T1, T2});
             }),
             py::arg("omega1") = 5.0, py::arg("omega2") = 2.0, py::arg("lam") = 0.0,
             py::arg("kind") = CouplingKind::PositionPosition, py::arg("gamma1") = 1.5e-4, py::arg("gamma2") = 1.5e-4,
             py::arg("T1") = 98.0, py::arg("T2") = 98.0)
        .def_property_readonly("omega1", &ModelParams::omega1)
        .def_property_readonly("omega2", &ModelParams::omega2)
        .def_property_readonly("lam", &ModelParams::lambda)
        .def_property_readonly("kappa", &ModelParams::kappa)
        .def_property_readonly("kind", &ModelParams::kind)
        .def_property_readonly("gamma1", &ModelParams::gamma1)
        .def_property_readonly("gamma2", &ModelParams::gamma2)
        .def_property_readonly("T1", &ModelParams::T1)
        .def_property_readonly("T2", &ModelParams::T2)
        .def_property_readonly("lambda_c", &ModelParams::lambda_c)
        .def("with_lambda", &ModelParams::with_lambda)
        .def("with_temperatures", &ModelParams::with_temperatures);

    m.def("critical_coupling", &critical_coupling, py::arg("kind"), py::arg("omega1"), py::arg("omega2"));
    m.def("normal_mode_frequencies", [](const ModelParams& mp) {
        const NormalModes nm = normal_mode_frequencies(mp);
        return py::make_tuple(nm.omega_plus, nm.omega_minus);
    });
    m.def("bose_occupation", &bose_occupation, py::arg("omega"), py::arg("beta"));

    m.def(
        "rates",
        [](const ModelParams& mp, Basis b, RateConvention c) { return Eigen::Matrix4d(rates_for(mp, b, c).matrix()); },
        py::arg("model"), py::arg("basis"), py::arg("convention") = RateConvention::Bose,
        "Gamma(A_i, A_j) over the ladder order (a1, a2, a1', a2')");
    m.def(
        "steady_covariance",
        [](const ModelParams& mp, Basis b, RateConvention c) {
            const SteadyStateSolution s = solve_steady_covariance(mp, rates_for(mp, b, c));
            return py::make_tuple(s.covariance.sigma, s.residual);
        },
        py::arg("model"), py::arg("basis"), py::arg("convention") = RateConvention::Bose,
        "Master-equation steady-state covariance over (x1, p1, x2, p2) and the linear-solve residual");
    m.def(
        "langevin_covariance",
        [](const ModelParams& mp, double rel_tol, double abs_tol, double window_factor, int max_subdivisions) {
            const LangevinResult r =
                steady_second_moments(mp, {rel_tol, abs_tol, window_factor, max_subdivisions});
            return py::make_tuple(r.covariance.sigma, r.quad_error);
        },
        py::arg("model"), py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-13, py::arg("window_factor") = 10.0,
        py::arg("max_subdivisions") = 20000);
    m.def(
        "gibbs_covariance", [](const ModelParams& mp, double T) { return gibbs_second_moments({mp, T}).sigma; },
        py::arg("model"), py::arg("T"));

    m.def(
        "occupation", [](const Eigen::Matrix4d& s, int mode) { return occupation_from_covariance(as_cov(s), mode); },
        py::arg("sigma"), py::arg("mode"));
    m.def("symplectic_eigenvalues", [](const Eigen::Matrix4d& s) {
        const SymplecticSpectrum sp = symplectic_eigenvalues(as_cov(s));
        return py::make_tuple(sp.n_minus, sp.n_plus);
    });
    m.def("mutual_information", [](const Eigen::Matrix4d& s) { return gaussian_mutual_information(as_cov(s)); });
    m.def("entropy_function", &entropy_function);

    m.def(
        "oracle_occupations",
        [](const ModelParams& mp, Basis b, int n_max1, int n_max2, double tail_tol, RateConvention c) {
            const OracleResult r = oracle_steady_occupations(mp, rates_for(mp, b, c), {n_max1, n_max2, tail_tol});
            return py::make_tuple(r.n1, r.n2, r.tail);
        },
        py::arg("model"), py::arg("basis"), py::arg("n_max1"), py::arg("n_max2"), py::arg("tail_tol") = 1e-8,
        py::arg("convention") = RateConvention::Bose, "Truncated Fock-space steady-state occupations and cutoff tail");

    m.def("preset_ids", &preset_ids);
    m.def(
        "preset_config", [](const std::string& id) { return config_to_text(preset(id)); }, py::arg("preset_id"),
        "Preset sweep configuration as JSON text");
    m.def(
        "run_sweep",
        [](const std::string& config_json) {
            const SweepConfig cfg = config_from_text(config_json);
            std::vector<SweepRow> rows;
            {
                py::gil_scoped_release release;
                rows = run_sweep(cfg);
            }
            py::list out;
            for (const auto& r : rows) out.append(row_to_dict(r));
            return out;
        },
        py::arg("config_json"), "Run a sweep from JSON config text; returns a list of row dicts");
}
