// Minimal enclosing spherical cap for up to four points, by closed
// enumeration of pair and triple support candidates. Radii above pi/2 are
// first-class; no convexity assumption is made anywhere.
#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "capcover/geometry.hpp"

namespace capcover {

struct SupportResult {
    Cap cap;
    std::vector<int> support;  // indices of boundary points certifying minimality
    bool antipodal_tie = false;
};

namespace detail {

// Deterministic unit vector perpendicular to p: Gram-Schmidt against the
// coordinate axis with the smallest |component|.
inline UnitVec any_perpendicular(const UnitVec& p) {
    Vec3 axis{1, 0, 0};
    if (std::abs(p.y) <= std::abs(p.x) && std::abs(p.y) <= std::abs(p.z))
        axis = {0, 1, 0};
    else if (std::abs(p.z) <= std::abs(p.x) && std::abs(p.z) <= std::abs(p.y))
        axis = {0, 0, 1};
    return UnitVec(axis - dot(axis, p) * p);
}

inline double max_distance(const UnitVec& center, std::span<const UnitVec> pts) {
    double m = 0.0;
    for (const auto& p : pts) m = std::max(m, angular_distance(center, p));
    return m;
}

}  // namespace detail

/// Smallest cap containing all points (1 to 4 of them). The support set is
/// the certificate: 1 point means radius 0, 2 points the geodesic midpoint,
/// 3 points a circumcap. A two-point antipodal input has a continuum of
/// optimal centers; a deterministic perpendicular center is returned with
/// antipodal_tie set.
inline SupportResult min_enclosing_cap(std::span<const UnitVec> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 1 || n > 4) throw std::invalid_argument("min_enclosing_cap: need 1..4 points");

    std::optional<SupportResult> best;
    auto consider = [&](const UnitVec& center, std::vector<int> support, bool tie) {
        const double radius = detail::max_distance(center, pts);
        // Feasible by construction; keep the strictly smallest radius so that
        // candidate order (triples, pairs, singletons) breaks exact ties.
        if (!best || radius < best->cap.theta - 1e-15)
            best = SupportResult{Cap{center, radius}, std::move(support), tie};
    };

    // Triple supports: each circumcircle bounds two caps, one per pole.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Vec3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
                if (norm(nrm) < kGeomEps) continue;
                const UnitVec pole(nrm);
                consider(pole, {i, j, k}, false);
                consider(pole.antipode(), {i, j, k}, false);
            }

    // Pair supports: geodesic midpoint, and the far midpoint for radii > pi/2.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vec3 sum = pts[i] + pts[j];
            if (norm(sum) < kGeomEps) {
                // Antipodal pair: every center on the perpendicular great
                // circle is optimal at radius pi/2. Steer toward the other
                // points when any exist, else use the fixed perpendicular.
                if (n == 2) {
                    consider(detail::any_perpendicular(pts[i]), {i, j}, true);
                } else {
                    Vec3 rest{0, 0, 0};
                    for (int k = 0; k < n; ++k)
                        if (k != i && k != j) rest = rest + pts[k];
                    const Vec3 perp = rest - dot(rest, pts[i]) * pts[i];
                    consider(norm(perp) < kGeomEps ? detail::any_perpendicular(pts[i])
                                                   : UnitVec(perp),
                             {i, j}, true);
                }
                continue;
            }
            const UnitVec mid(sum);
            consider(mid, {i, j}, false);
            consider(mid.antipode(), {i, j}, false);
        }

    // Singleton supports (all points coincident, radius ~ 0).
    for (int i = 0; i < n; ++i) consider(pts[i], {i}, false);

    return *best;
}

inline double theta_min(const PointQuad& q) {
    const std::array<UnitVec, 4> pts = {q.a, q.b, q.c, q.d};
    return min_enclosing_cap(pts).cap.theta;
}

/// Verification oracle: scan a Fibonacci lattice of candidate centers and
/// keep the one minimizing the max distance to the points. The lattice is
/// dense enough that the result is within grid_resolution of optimal.
inline Cap brute_force_cap(std::span<const UnitVec> pts, double grid_resolution) {
    if (!(grid_resolution > 0.0))
        throw std::invalid_argument("brute_force_cap: resolution must be positive");
    const auto count =
        static_cast<std::size_t>(std::ceil(40.0 / (grid_resolution * grid_resolution)));
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    UnitVec best_center;
    double best_radius = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
        const double phi = golden_angle * static_cast<double>(i);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        UnitVec c;
        c.x = s * std::cos(phi);
        c.y = s * std::sin(phi);
        c.z = z;
        const double r = detail::max_distance(c, pts);
        if (r < best_radius) {
            best_radius = r;
            best_center = c;
        }
    }
    return Cap{best_center, best_radius};
}

}  // namespace capcover
