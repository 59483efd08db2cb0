// Lower-bound machinery for the coverage probability: the dominating
// function psi for the theta_min density, its log-convex envelope, the
// bounds q and q_lcv with their nontriviality thresholds, and the empirical
// dominance check of c * G against F.
#pragma once

#include <vector>

#include "capcover/coverage.hpp"
#include "capcover/radius_dist.hpp"

namespace capcover {

/// Piecewise dominating function for the theta_min density: the exact
/// density 24 sin^5(t/2) cos(t/2) [2 - 3 sin^2(t/2)] on [0, pi/2], and
/// 4 kappa g(t) on (pi/2, pi].
inline double psi(double theta, const ThetaAbcDist& dist = ThetaAbcDist::shared()) {
    if (!(theta >= 0.0 && theta <= kPi)) throw std::domain_error("psi: theta outside [0, pi]");
    if (theta <= kPi / 2) {
        const double s = std::sin(theta / 2), c = std::cos(theta / 2);
        const double s2 = s * s;
        return 24.0 * s2 * s2 * s * c * (2.0 - 3.0 * s2);
    }
    return 4.0 * constants::kappa_closed * dist.g(theta);
}

/// q(omega) = (1/8)(1 - 32 kappa G(pi - omega)); a lower bound for p(omega)
/// wherever it is positive.
inline double q_bound(double omega, const ThetaAbcDist& dist = ThetaAbcDist::shared()) {
    if (!(omega > 0.0 && omega < kPi / 2))
        throw std::domain_error("q_bound: omega outside (0, pi/2)");
    return 0.125 * (1.0 - 32.0 * constants::kappa_closed * dist.G(kPi - omega));
}

/// Log-convex envelope (5/2)^((theta0 - theta)/(theta0 - pi/2)) - 1 on
/// [pi/2, theta0].
inline double psi_lcv(double theta) {
    if (!(theta >= kPi / 2 && theta <= constants::theta0))
        throw std::domain_error("psi_lcv: theta outside [pi/2, theta0]");
    const double h = constants::theta0 - kPi / 2;
    return std::pow(2.5, (constants::theta0 - theta) / h) - 1.0;
}

/// Running integral of psi_lcv from pi/2, in closed form.
inline double Psi_lcv(double theta) {
    if (!(theta >= kPi / 2 && theta <= constants::theta0))
        throw std::domain_error("Psi_lcv: theta outside [pi/2, theta0]");
    const double h = constants::theta0 - kPi / 2;
    const double log52 = std::log(2.5);
    return h * (2.5 - std::pow(2.5, (constants::theta0 - theta) / h)) / log52 -
           (theta - kPi / 2);
}

/// q_lcv(omega) = 1/8 - Psi_lcv(pi - omega), for omega in (omega0, pi/2).
inline double q_lcv_bound(double omega) {
    if (!(omega > constants::omega0 && omega < kPi / 2))
        throw std::domain_error("q_lcv_bound: omega outside (omega0, pi/2)");
    return 0.125 - Psi_lcv(kPi - omega);
}

namespace detail {
template <typename F>
double bisect_root(const F& f, double lo, double hi, double tol) {
    double flo = f(lo);
    if (flo * f(hi) > 0.0) throw std::domain_error("bisect_root: no sign change");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) * flo > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}
}  // namespace detail

/// Smallest omega above which q is positive (paper value 84.25 degrees).
inline double q_threshold(const ThetaAbcDist& dist = ThetaAbcDist::shared(),
                          double tol = 1e-6) {
    return detail::bisect_root([&](double w) { return q_bound(w, dist); },
                               80.0 * kPi / 180.0, 90.0 * kPi / 180.0 - 1e-12, tol);
}

/// Smallest omega above which q_lcv is positive (paper value 83.90 degrees).
inline double q_lcv_threshold(double tol = 1e-6) {
    return detail::bisect_root([](double w) { return q_lcv_bound(w); }, 80.0 * kPi / 180.0,
                               90.0 * kPi / 180.0 - 1e-12, tol);
}

struct BoundReport {
    double omega = 0.0;
    double q = 0.0;
    double q_lcv = 0.0;
    double gilbert = 0.0;
    std::optional<double> p_exact_or_open;
};

inline BoundReport bound_report(double omega,
                                const ThetaAbcDist& dist = ThetaAbcDist::shared()) {
    return {omega, q_bound(omega, dist), q_lcv_bound(omega), gilbert_upper(omega),
            p_exact(omega)};
}

struct DominancePoint {
    double xi = 0.0;        // evaluation point in (pi/2, pi)
    double f_hat = 0.0;     // empirical F(xi) = 8 (Phi_hat(xi) - 7/8)
    double f_sigma = 0.0;   // standard error of f_hat
    double crude = 0.0;     // 4 G(xi)
    double refined = 0.0;   // 32 kappa G(xi)
    bool crude_ok = true;   // 4 G >= F_hat - 3 sigma
    bool refined_ok = true; // 32 kappa G >= F_hat - 3 sigma
};

/// Empirical check of the estimates 4 G >= F and (32 kappa) G >= F from n
/// simulated theta_min values, at each grid point.
inline std::vector<DominancePoint> dominance_check(long long n, std::span<const double> grid,
                                                   std::uint64_t seed,
                                                   const ThetaAbcDist& dist =
                                                       ThetaAbcDist::shared()) {
    if (n < 1) throw std::invalid_argument("dominance_check: n must be >= 1");
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k) {
        RngStream rng(seed, static_cast<std::uint64_t>(k));
        samples.push_back(theta_min(sample_quad(rng)));
    }
    std::sort(samples.begin(), samples.end());
    std::vector<DominancePoint> out;
    out.reserve(grid.size());
    for (double xi : grid) {
        DominancePoint pt;
        pt.xi = xi;
        const auto below = std::upper_bound(samples.begin(), samples.end(), xi) -
                           samples.begin();
        const double phi_hat = static_cast<double>(below) / static_cast<double>(n);
        pt.f_hat = 8.0 * (phi_hat - 7.0 / 8.0);
        pt.f_sigma = 8.0 * std::sqrt(phi_hat * (1.0 - phi_hat) / static_cast<double>(n));
        const double G = dist.G(std::min(xi, kPi));
        pt.crude = 4.0 * G;
        pt.refined = 32.0 * constants::kappa_closed * G;
        pt.crude_ok = pt.crude >= pt.f_hat - 3.0 * pt.f_sigma;
        pt.refined_ok = pt.refined >= pt.f_hat - 3.0 * pt.f_sigma;
        out.push_back(pt);
    }
    return out;
}

}  // namespace capcover
