// Coverage of the sphere by four circular caps: the exact piecewise
// probability, Gilbert's bounds, an exact decision procedure via the
// minimal-cap duality, an independent boundary-arrangement oracle, and a
// reproducible Monte Carlo estimator.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <thread>
#include <vector>

#include "capcover/min_cap.hpp"
#include "capcover/rng.hpp"

namespace capcover {

struct CoverageEstimate {
    double omega = 0.0;
    double p_hat = 0.0;
    double std_err = 0.0;
    long long n = 0;
    std::uint64_t seed = 0;
};

/// Coverage probability of four caps of common radius omega. The interval
/// (omega0, pi/2) has no known closed form; that case is reported as an
/// empty optional, never a fabricated number.
inline std::optional<double> p_exact(double omega) {
    if (!(omega >= 0.0 && omega <= kPi)) throw std::domain_error("p_exact: omega outside [0, pi]");
    if (omega <= constants::omega0) return 0.0;
    if (omega < kPi / 2) return std::nullopt;
    const double c = std::cos(omega / 2);
    const double c2 = c * c;
    return 1.0 - 2.0 * c2 * c2 * c2 * (8.0 - 9.0 * c2);
}

/// Gilbert's upper bound 1 - 2 cos^8(omega/2) + cos^4(omega).
inline double gilbert_upper(double omega) {
    if (!(omega >= 0.0 && omega <= kPi))
        throw std::domain_error("gilbert_upper: omega outside [0, pi]");
    const double c = std::cos(omega / 2);
    const double c4 = c * c * c * c;
    const double co = std::cos(omega);
    const double co2 = co * co;
    return 1.0 - 2.0 * c4 * c4 + co2 * co2;
}

// Slack applied at cap boundaries; tangency counts as covered.
inline constexpr double kCoverSlack = 1e-9;

/// Independent covering criterion: the union of closed caps covers S^2 iff
/// every boundary circle is covered by the union of the other caps. Each
/// other cap meets a circle in a closed arc of its angle parameter; the test
/// reduces to covering [0, 2pi) with those arcs. Correct away from tangency
/// configurations of measure zero.
inline bool covers_boundary_arrangement(const std::array<Cap, 4>& caps) {
    for (const auto& cap : caps)
        if (cap.theta >= kPi - kCoverSlack) return true;
    for (int i = 0; i < 4; ++i) {
        const UnitVec& ci = caps[i].center;
        const double wi = caps[i].theta;
        const UnitVec u = detail::any_perpendicular(ci);
        const UnitVec v(cross(ci, u));
        const double sw = std::sin(wi), cw = std::cos(wi);
        // Arcs of circle i inside cap j, as closed intervals of t (mod 2pi).
        std::vector<std::pair<double, double>> arcs;
        bool full = false;
        for (int j = 0; j < 4 && !full; ++j) {
            if (j == i) continue;
            const double A = dot(u, caps[j].center);
            const double B = dot(v, caps[j].center);
            const double radius = sw * std::hypot(A, B);
            const double rhs = std::cos(caps[j].theta) - cw * dot(ci, caps[j].center);
            // Circle point y(t) is in cap j iff radius * cos(t - phi) >= rhs.
            if (rhs <= -radius + kCoverSlack) {
                full = true;  // whole circle inside cap j
            } else if (rhs < radius) {
                const double phi = std::atan2(B, A);
                const double half = std::acos(std::clamp(rhs / radius, -1.0, 1.0));
                arcs.emplace_back(phi - half, phi + half);
            }
        }
        if (full) continue;
        if (arcs.empty()) return false;
        // Normalize starts into [0, 2pi), duplicate arcs one turn ahead, and
        // greedily sweep one full turn from the first arc start.
        const std::size_t m = arcs.size();
        for (auto& [s, e] : arcs) {
            const double len = e - s;
            s = std::fmod(s, 2.0 * kPi);
            if (s < 0.0) s += 2.0 * kPi;
            e = s + len;
        }
        std::sort(arcs.begin(), arcs.end());
        for (std::size_t k = 0; k < m; ++k)
            arcs.emplace_back(arcs[k].first + 2.0 * kPi, arcs[k].second + 2.0 * kPi);
        const double start = arcs[0].first;
        double reach = start;
        for (const auto& [s, e] : arcs) {
            if (s > reach + kCoverSlack) break;
            reach = std::max(reach, e);
            if (reach >= start + 2.0 * kPi - kCoverSlack) break;
        }
        if (reach < start + 2.0 * kPi - kCoverSlack) return false;
    }
    return true;
}

/// True iff the four caps cover S^2. For a common radius this is the exact
/// duality: the caps cover iff the minimal cap of the antipodal centers has
/// radius >= pi - omega. Mixed radii fall back to the arrangement test.
inline bool covers(const std::array<Cap, 4>& caps) {
    const double omega = caps[0].theta;
    for (const auto& cap : caps)
        if (std::abs(cap.theta - omega) > 1e-12) return covers_boundary_arrangement(caps);
    if (omega >= kPi) return true;
    std::array<UnitVec, 4> anti;
    for (int i = 0; i < 4; ++i) anti[i] = caps[i].center.antipode();
    return min_enclosing_cap(anti).cap.theta >= kPi - omega - kCoverSlack;
}

/// Monte Carlo coverage probability. Trial k draws its four centers from the
/// counter-based substream (seed, k), so the estimate is a pure function of
/// (omega, n, seed) at any thread count.
inline CoverageEstimate p_monte_carlo(double omega, long long n, std::uint64_t seed,
                                      int threads = 1) {
    if (n < 1) throw std::invalid_argument("p_monte_carlo: n must be >= 1");
    threads = std::max(1, threads);
    std::vector<long long> hits(threads, 0);
    auto worker = [&](int t) {
        long long count = 0;
        for (long long k = t; k < n; k += threads) {
            RngStream rng(seed, static_cast<std::uint64_t>(k));
            std::array<Cap, 4> caps;
            for (auto& cap : caps) cap = Cap{sample_uniform(rng), omega};
            if (covers(caps)) ++count;
        }
        hits[t] = count;
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    long long total = 0;
    for (long long h : hits) total += h;
    const double p = static_cast<double>(total) / static_cast<double>(n);
    return {omega, p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n, seed};
}

}  // namespace capcover
