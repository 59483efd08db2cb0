// Closed-form densities for random inscribed triangles, in both the side
// chart (a, b) and the inscribed-angle chart (alpha, beta), plus the
// spherical-angle map lambda. Integration always happens in the angle chart,
// where the 1/sqrt(4r^2 - a^2) endpoint singularities vanish identically.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "capcover/geometry.hpp"

namespace capcover {

/// Joint density of two angles of a triangle inscribed in a fixed circle:
/// 2/pi^2 on {alpha, beta > 0, alpha + beta < pi}. Total over all inputs.
inline double circle_angle_density(double alpha, double beta) {
    if (alpha <= 0.0 || beta <= 0.0 || alpha + beta >= kPi) return 0.0;
    return 2.0 / (kPi * kPi);
}

/// Joint density of two sides of a triangle inscribed in a fixed circle of
/// radius r; the sides are independent.
inline double circle_side_density(double a, double b, double r) {
    if (!(r > 0.0)) throw std::domain_error("circle_side_density: r must be positive");
    if (a <= 0.0 || a >= 2.0 * r || b <= 0.0 || b >= 2.0 * r) return 0.0;
    const double ar = a / r, br = b / r;
    return 4.0 / (kPi * kPi * r * r) / std::sqrt((4.0 - ar * ar) * (4.0 - br * br));
}

/// Joint density of two angles of a chordal triangle on the sphere (random
/// circumradius): (8/(3 pi)) sin(alpha) sin(beta) sin(alpha+beta).
inline double sphere_angle_density(double alpha, double beta) {
    if (alpha <= 0.0 || beta <= 0.0 || alpha + beta >= kPi) return 0.0;
    return 8.0 / (3.0 * kPi) * std::sin(alpha) * std::sin(beta) * std::sin(alpha + beta);
}

namespace detail {
inline void check_side_edges(double a, double b, double r, const char* fn) {
    if (a == 2.0 * r || b == 2.0 * r)
        throw std::domain_error(std::string(fn) +
                                ": integrable singularity at a side equal to the diameter; "
                                "use the angle chart");
}
}  // namespace detail

/// Acute portion of the conditional side density given circumradius
/// r = sin(theta): (a b)/(6 pi r^4) [a/sqrt(4r^2-a^2) + b/sqrt(4r^2-b^2)]
/// on {0 < a < 2r, 0 < b < 2r, a^2 + b^2 > 4r^2}.
inline double delta_density(double a, double b, double theta) {
    const double r = std::sin(theta);
    if (!(r > 0.0)) throw std::domain_error("delta_density: sin(theta) must be positive");
    detail::check_side_edges(a, b, r, "delta_density");
    if (a <= 0.0 || a > 2.0 * r || b <= 0.0 || b > 2.0 * r) return 0.0;
    if (a * a + b * b <= 4.0 * r * r) return 0.0;
    const double r2 = r * r;
    return a * b / (6.0 * kPi * r2 * r2) *
           (a / std::sqrt(4.0 * r2 - a * a) + b / std::sqrt(4.0 * r2 - b * b));
}

/// Acute portion in the angle chart: delta(a, b, theta) da db with
/// a = 2r sin(alpha), b = 2r sin(beta) collapses to the sphere angle density
/// restricted to the acute region {alpha, beta < pi/2, alpha + beta > pi/2}.
inline double delta_density_angles(double alpha, double beta) {
    if (alpha >= kPi / 2 || beta >= kPi / 2 || alpha + beta <= kPi / 2) return 0.0;
    return sphere_angle_density(alpha, beta);
}

/// Full conditional density of (a, b) given circumradius r = sin(theta):
/// a (2/3, 1/3)-weighted mixture whose bracket is
/// [X + Y + |X - Y|] with X = (a/r) sqrt(4 - (b/r)^2), Y = (b/r) sqrt(4 - (a/r)^2).
inline double trivariate_mixture_density(double a, double b, double theta) {
    const double r = std::sin(theta);
    if (!(r > 0.0))
        throw std::domain_error("trivariate_mixture_density: sin(theta) must be positive");
    detail::check_side_edges(a, b, r, "trivariate_mixture_density");
    if (a <= 0.0 || a > 2.0 * r || b <= 0.0 || b > 2.0 * r) return 0.0;
    const double ar = a / r, br = b / r;
    const double sa = std::sqrt(4.0 - ar * ar), sb = std::sqrt(4.0 - br * br);
    const double xx = ar * sb, yy = br * sa;
    const double r2 = r * r;
    return a * b / (6.0 * kPi * r2 * r2) * (xx + yy + std::abs(xx - yy)) / (sa * sb);
}

/// Spherical angle at the third vertex of the inscribed triangle with chord
/// sides a, b and circumradius sin(theta). The arccos argument is clamped
/// within 1e-12 of [-1, 1]; a larger excursion signals a math bug and throws.
inline double lambda_angle(double a, double b, double theta) {
    const double r = std::sin(theta);
    if (!(a > 0.0 && a < 2.0 && b > 0.0 && b < 2.0))
        throw std::domain_error("lambda_angle: chords must lie in (0, 2)");
    if (!(r > 0.0) || a > 2.0 * r || b > 2.0 * r)
        throw std::domain_error("lambda_angle: chords must lie in (0, 2 sin(theta))");
    const double r2 = r * r;
    const double num = (1.0 - r2) * a * b -
                       std::sqrt(std::max(0.0, 4.0 * r2 - a * a)) *
                           std::sqrt(std::max(0.0, 4.0 * r2 - b * b));
    const double den = r2 * std::sqrt(4.0 - a * a) * std::sqrt(4.0 - b * b);
    double z = num / den;
    if (z > 1.0 + 1e-12 || z < -1.0 - 1e-12)
        throw std::logic_error("lambda_angle: arccos argument out of range");
    z = std::clamp(z, -1.0, 1.0);
    return std::acos(z);
}

/// lambda in the angle chart: sides a = 2r sin(alpha), b = 2r sin(beta).
inline double lambda_angle_chart(double alpha, double beta, double theta) {
    const double r = std::sin(theta);
    return lambda_angle(2.0 * r * std::sin(alpha), 2.0 * r * std::sin(beta), theta);
}

}  // namespace capcover
