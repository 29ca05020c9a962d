// quadrature.cpp — Global adaptive G7K15 with a priority queue over intervals

#include "cosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "cosc/errors.hpp"

namespace cosc {

namespace {

constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a, b;
    Eigen::VectorXd value;
    double error;
};

struct ByError {
    bool operator()(const Interval& x, const Interval& y) const { return x.error < y.error; }
};

Interval gk15(const std::function<Eigen::VectorXd(double)>& f, double a, double b, int& evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Eigen::VectorXd fc = f(c);
    Eigen::VectorXd kron = wgk[7] * fc;
    Eigen::VectorXd gauss = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const Eigen::VectorXd f1 = f(c - h * xgk[j]);
        const Eigen::VectorXd f2 = f(c + h * xgk[j]);
        kron += wgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
    }
    evals += 15;
    Interval iv{a, b, h * kron, 0.0};
    iv.error = (h * (kron - gauss)).cwiseAbs().maxCoeff();
    return iv;
}

} // namespace

QuadResult integrate_adaptive(const std::function<Eigen::VectorXd(double)>& f, std::vector<double> breaks,
                              double abs_tol, double rel_tol, int max_intervals) {
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    if (breaks.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two breakpoints");

    QuadResult out;
    std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
    for (size_t k = 0; k + 1 < breaks.size(); ++k) heap.push(gk15(f, breaks[k], breaks[k + 1], out.evaluations));

    auto totals = [&heap](Eigen::VectorXd& value, double& error) {
        auto copy = heap;
        value.setZero(copy.top().value.size());
        error = 0.0;
        while (!copy.empty()) {
            value += copy.top().value;
            error += copy.top().error;
            copy.pop();
        }
    };

    Eigen::VectorXd value;
    double error = 0.0;
    totals(value, error);
    while (error > std::max(abs_tol, rel_tol * value.cwiseAbs().maxCoeff()) &&
           static_cast<int>(heap.size()) < max_intervals) {
        const Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push(worst);
            break;
        }
        Interval left = gk15(f, worst.a, mid, out.evaluations);
        Interval right = gk15(f, mid, worst.b, out.evaluations);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(std::move(left));
        heap.push(std::move(right));
        if (heap.size() % 64 == 0) totals(value, error);    // limit drift of running sums
    }
    totals(value, error);
    out.value = value;
    out.error = error;
    out.intervals = static_cast<int>(heap.size());
    out.converged = error <= std::max(abs_tol, rel_tol * value.cwiseAbs().maxCoeff());
    return out;
}

} // namespace cosc
