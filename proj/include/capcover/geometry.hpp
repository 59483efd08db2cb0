// Spherical geometry primitives: unit vectors, caps, triangle and
// tetrahedron predicates, areas, and the named constants of the problem.
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace capcover {

inline constexpr double kPi = std::numbers::pi;

// Tolerance for "exactly degenerate" geometric decisions.
inline constexpr double kGeomEps = 1e-12;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

/// Point on the unit sphere. Construction normalizes; throws on the zero vector.
struct UnitVec : Vec3 {
    UnitVec() : Vec3{1.0, 0.0, 0.0} {}
    UnitVec(double px, double py, double pz) : UnitVec(Vec3{px, py, pz}) {}
    explicit UnitVec(Vec3 v) {
        const double n = norm(v);
        if (!(n > 0.0)) throw std::domain_error("UnitVec: cannot normalize zero vector");
        x = v.x / n;
        y = v.y / n;
        z = v.z / n;
    }
    UnitVec antipode() const {
        UnitVec r = *this;
        r.x = -x; r.y = -y; r.z = -z;
        return r;
    }
};

/// Geodesic distance in [0, pi]. Uses atan2(|u x v|, u.v); a bare acos of the
/// dot product loses half the significant digits near 0 and pi.
inline double angular_distance(const UnitVec& u, const UnitVec& v) {
    return std::atan2(norm(cross(u, v)), dot(u, v));
}

/// Closed spherical cap: all Y with angular_distance(center, Y) <= theta.
struct Cap {
    UnitVec center;
    double theta = 0.0;  // radians, in [0, pi]

    bool contains(const UnitVec& p, double slack = 1e-12) const {
        return angular_distance(center, p) <= theta + slack;
    }
};

struct PointQuad {
    UnitVec a, b, c, d;
};

// Named constants of the four-cap problem.
namespace constants {
inline const double omega0 = std::acos(1.0 / 3.0);            // 1.23095941...
inline const double theta0 = std::acos(-1.0 / 3.0);           // 1.91063323...
inline constexpr double kappa_closed = 11.0 / 96.0 - 1.0 / (8.0 * kPi * kPi);
inline constexpr double e_n_closed = 32.0 * kappa_closed;     // = 11/3 - 4/pi^2
}  // namespace constants

namespace detail {
inline double det3(Vec3 a, Vec3 b, Vec3 c) { return dot(a, cross(b, c)); }

inline double chord_sq(const UnitVec& u, const UnitVec& v) {
    const Vec3 d = u - v;
    return dot(d, d);
}
}  // namespace detail

/// True iff the planar triangle on the three chords is strictly acute.
/// Throws std::domain_error for collinear or coincident inputs.
inline bool is_acute_chordal(const UnitVec& a, const UnitVec& b, const UnitVec& c) {
    if (norm(cross(b - a, c - a)) < kGeomEps)
        throw std::domain_error("is_acute_chordal: degenerate triangle");
    const double ab = detail::chord_sq(a, b);
    const double bc = detail::chord_sq(b, c);
    const double ca = detail::chord_sq(c, a);
    return ab + bc > ca && bc + ca > ab && ca + ab > bc;
}

/// True iff the origin lies strictly inside the tetrahedron hull of the four
/// points. Boundary cases (any orientation determinant within 1e-12 of zero)
/// count as not well-centered.
inline bool is_well_centered(const PointQuad& q) {
    // Barycentric cofactors: origin = sum lambda_i p_i with
    // lambda ~ (det(b,c,d), -det(a,c,d), det(a,b,d), -det(a,b,c)).
    const std::array<double, 4> lam = {
        detail::det3(q.b, q.c, q.d),
        -detail::det3(q.a, q.c, q.d),
        detail::det3(q.a, q.b, q.d),
        -detail::det3(q.a, q.b, q.c),
    };
    bool all_pos = true, all_neg = true;
    for (double l : lam) {
        if (std::abs(l) < kGeomEps) return false;
        all_pos = all_pos && l > 0.0;
        all_neg = all_neg && l < 0.0;
    }
    return all_pos || all_neg;
}

/// Cap bounded by the circumcircle of (a, b, c) on the side containing d.
/// Throws for collinear bases or when d lies on the circumcircle plane.
inline Cap circumcap_containing(const UnitVec& a, const UnitVec& b, const UnitVec& c,
                                const UnitVec& d) {
    const Vec3 nraw = cross(b - a, c - a);
    if (norm(nraw) < kGeomEps)
        throw std::domain_error("circumcap_containing: collinear base points");
    const UnitVec n(nraw);
    const double side = dot(n, d) - dot(n, a);
    if (std::abs(side) < kGeomEps)
        throw std::domain_error("circumcap_containing: apex on circumcircle plane");
    const UnitVec pole = side > 0.0 ? n : n.antipode();
    return Cap{pole, angular_distance(pole, a)};
}

/// Girard excess of the spherical triangle spanned by minor arcs.
/// Coincident vertices give area 0; an antipodal pair is an error.
inline double spherical_triangle_area(const UnitVec& a, const UnitVec& b, const UnitVec& c) {
    const std::array<const UnitVec*, 3> v = {&a, &b, &c};
    std::array<Vec3, 3> n;  // n[i] = normal of great circle through v[i], v[i+1]
    for (int i = 0; i < 3; ++i) {
        n[i] = cross(*v[i], *v[(i + 1) % 3]);
        if (norm(n[i]) < kGeomEps) {
            if (dot(*v[i], *v[(i + 1) % 3]) < 0.0)
                throw std::domain_error("spherical_triangle_area: antipodal vertex pair");
            return 0.0;  // coincident pair, degenerate triangle
        }
    }
    double excess = -kPi;
    for (int i = 0; i < 3; ++i) {
        // Interior angle at v[i], between arcs to the two other vertices.
        const Vec3 p = cross(*v[i], *v[(i + 2) % 3]);
        const Vec3 q = cross(*v[i], *v[(i + 1) % 3]);
        excess += std::atan2(norm(cross(p, q)), dot(p, q));
    }
    return std::max(excess, 0.0);
}

/// Largest area of a spherical triangle inscribed in a circle of spherical
/// radius theta: -6*arccot(sqrt(3) cos theta) - pi, theta in [pi/2, pi].
/// The arccot branch is arctan(1/x) in (-pi/2, 0) for x < 0, with the limit
/// -pi/2 at x = 0; this is the branch that makes the formula continuous,
/// equal to 2*pi at pi/2 and 0 at pi.
inline double max_equilateral_area(double theta) {
    if (!(theta >= kPi / 2 - 1e-15 && theta <= kPi + 1e-15))
        throw std::domain_error("max_equilateral_area: theta outside [pi/2, pi]");
    const double x = std::sqrt(3.0) * std::cos(theta);
    const double arccot = x >= 0.0 ? -kPi / 2 : std::atan(1.0 / x);
    return std::max(-6.0 * arccot - kPi, 0.0);
}

}  // namespace capcover
