// quadrature.hpp — Vector-valued adaptive Gauss-Kronrod (7/15) integration

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace cosc {

struct QuadResult {
    Eigen::VectorXd value;
    double error{0.0};        // sum of per-interval |K15 - G7| (inf-norm)
    int evaluations{0};
    int intervals{0};
    bool converged{false};
};

// Integrates f over [breaks.front(), breaks.back()], starting from the given
// partition and bisecting the worst interval until the total error estimate is
// <= max(abs_tol, rel_tol * ||I||_inf) or max_intervals is reached.
QuadResult integrate_adaptive(const std::function<Eigen::VectorXd(double)>& f, std::vector<double> breaks,
                              double abs_tol, double rel_tol, int max_intervals);

} // namespace cosc
