// validation.cpp — Low-temperature equivalence suite against the Fock oracle

#include "cosc/validation.hpp"

#include <algorithm>
#include <cmath>

#include "cosc/covariance.hpp"
#include "cosc/errors.hpp"
#include "cosc/fock_oracle.hpp"
#include "cosc/lindblad_steady.hpp"

namespace cosc {

std::vector<LowTempCase> run_low_temp_suite(const LowTempOptions& options) {
    std::vector<LowTempCase> out;
    for (CouplingKind kind : {CouplingKind::PositionPosition, CouplingKind::RotatingWave}) {
        for (double dT : options.deltaT_list) {
            for (double frac : options.lambda_fracs) {
                for (Basis basis : {Basis::Local, Basis::Global}) {
                    LowTempCase c;
                    c.kind = kind;
                    c.basis = basis;
                    c.lambda_frac = frac;
                    c.deltaT = dT;
                    c.T2 = options.T2;
                    c.T1 = options.T2 - dT;
                    try {
                        RawParams raw;
                        raw.kind = kind;
                        raw.T1 = c.T1;
                        raw.T2 = c.T2;
                        raw.lambda = frac * critical_coupling(kind, raw.omega1, raw.omega2);
                        const ModelParams model = ModelParams::validate(raw);
                        const RateTable rates = rates_for(model, basis, options.rate_convention);
                        const SteadyStateSolution sol = solve_steady_covariance(model, rates);
                        c.covariance_n1 = occupation_from_covariance(sol.covariance, 1);
                        c.covariance_n2 = occupation_from_covariance(sol.covariance, 2);
                        const OracleResult o =
                            oracle_adaptive(model, rates, suggest_truncation(model, options.tail_tol * 0.01));
                        c.oracle_n1 = o.n1;
                        c.oracle_n2 = o.n2;
                        c.tail = o.tail;
                        c.n_max1 = o.n_max1;
                        c.n_max2 = o.n_max2;
                        c.rel_dev = std::max(std::abs(c.covariance_n1 / o.n1 - 1.0),
                                             std::abs(c.covariance_n2 / o.n2 - 1.0));
                        c.pass = c.rel_dev <= options.rel_tol && c.tail <= options.tail_tol;
                    } catch (const Error& e) {
                        c.status = to_string(e.code());
                        c.pass = false;
                    }
                    out.push_back(c);
                }
            }
        }
    }
    return out;
}

} // namespace cosc
