// Globally adaptive Gauss-Kronrod 15(7) quadrature over a finite interval.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace capcover {

struct QuadratureSpec {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    int max_subdivisions = 1 << 15;

    QuadratureSpec tightened(double factor) const {
        return {abs_tol * factor, rel_tol * factor, max_subdivisions};
    }
};

/// Thrown when the subdivision budget is exhausted; carries the best estimate.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(double best_, double error_bound_)
        : std::runtime_error("quadrature failed to converge: best estimate " +
                             std::to_string(best_) + " +/- " + std::to_string(error_bound_)),
          best(best_),
          error_bound(error_bound_) {}
    double best;
    double error_bound;
};

namespace detail {

// 15-point Kronrod abscissae/weights and embedded 7-point Gauss weights
// (QUADPACK dqk15 tables).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double integral;
    double error;
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    double fv[7][2];
    for (int j = 0; j < 7; ++j) {
        const double absc = half * kXgk[j];
        fv[j][0] = f(center - absc);
        fv[j][1] = f(center + absc);
        const double fsum = fv[j][0] + fv[j][1];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv[j][0]) + std::abs(fv[j][1]));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j][0] - reskh) + std::abs(fv[j][1] - reskh));
    const double integral = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);
    return {integral, err};
}

struct Interval {
    double a, b, integral, error;
    std::uint64_t order;  // insertion index; makes the heap order deterministic
    bool operator<(const Interval& o) const {
        return error != o.error ? error < o.error : order > o.order;
    }
};

}  // namespace detail

/// Adaptive integral of f over [a, b]. Worst-error-first bisection until the
/// summed error estimate meets max(abs_tol, rel_tol * |integral|).
template <typename F>
double integrate(const F& f, double a, double b, const QuadratureSpec& spec = {}) {
    if (a == b) return 0.0;
    std::priority_queue<detail::Interval> heap;
    std::uint64_t order = 0;
    auto first = detail::gk15(f, a, b);
    heap.push({a, b, first.integral, first.error, order++});
    double total = first.integral;
    double total_err = first.error;
    for (int n = 1; n < spec.max_subdivisions; ++n) {
        if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) return total;
        const detail::Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const auto left = detail::gk15(f, worst.a, mid);
        const auto right = detail::gk15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        heap.push({worst.a, mid, left.integral, left.error, order++});
        heap.push({mid, worst.b, right.integral, right.error, order++});
    }
    if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) return total;
    throw ConvergenceError(total, total_err);
}

}  // namespace capcover
