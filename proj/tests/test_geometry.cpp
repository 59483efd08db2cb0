#include <cmath>

#include "capcover/geometry.hpp"
#include "capcover/rng.hpp"
#include "doctest.h"

using namespace capcover;

namespace {
const UnitVec e1{1, 0, 0};
const UnitVec e2{0, 1, 0};
const UnitVec e3{0, 0, 1};

// L'Huilier's formula, used only as an independent cross-check; it breaks
// down at the great-circle limit the Girard form handles.
double lhuilier_area(const UnitVec& a, const UnitVec& b, const UnitVec& c) {
    const double sa = angular_distance(b, c);
    const double sb = angular_distance(c, a);
    const double sc = angular_distance(a, b);
    const double s = 0.5 * (sa + sb + sc);
    const double t = std::tan(s / 2) * std::tan((s - sa) / 2) * std::tan((s - sb) / 2) *
                     std::tan((s - sc) / 2);
    return 4.0 * std::atan(std::sqrt(std::max(0.0, t)));
}

std::array<UnitVec, 4> regular_tetrahedron() {
    const double s = 1.0 / std::sqrt(3.0);
    return {UnitVec{s, s, s}, UnitVec{s, -s, -s}, UnitVec{-s, s, -s}, UnitVec{-s, -s, s}};
}
}  // namespace

TEST_CASE("constants") {
    CHECK(constants::omega0 == doctest::Approx(1.23095941).epsilon(1e-8));
    CHECK(constants::theta0 == doctest::Approx(1.91063323).epsilon(1e-8));
    CHECK(std::abs(constants::theta0 - (kPi - constants::omega0)) < 1e-15);
    CHECK(constants::kappa_closed == doctest::Approx(0.10191818).epsilon(1e-7));
    CHECK(std::abs(constants::e_n_closed - (11.0 / 3.0 - 4.0 / (kPi * kPi))) < 1e-15);
}

TEST_CASE("angular_distance basics") {
    CHECK(angular_distance(e1, e1) == 0.0);
    CHECK(angular_distance(e1, e1.antipode()) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(angular_distance(e1, e2) == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("angular_distance is stable near 0 and pi") {
    const UnitVec close{1.0, 1e-9, 0.0};
    CHECK(angular_distance(e1, close) == doctest::Approx(1e-9).epsilon(1e-6));
    CHECK(angular_distance(e1.antipode(), close) == doctest::Approx(kPi - 1e-9).epsilon(1e-12));
}

TEST_CASE("angular_distance symmetry and triangle inequality") {
    RngStream rng(42);
    for (int i = 0; i < 2000; ++i) {
        const UnitVec u = sample_uniform(rng), v = sample_uniform(rng),
                      w = sample_uniform(rng);
        CHECK(angular_distance(u, v) == angular_distance(v, u));
        CHECK(angular_distance(u, w) <= angular_distance(u, v) + angular_distance(v, w) + 1e-12);
    }
}

TEST_CASE("is_acute_chordal") {
    CHECK(is_acute_chordal(e1, e2, e3));
    // A side through the center gives a right angle at any third vertex.
    CHECK_FALSE(is_acute_chordal(e1, e1.antipode(), e2));
    CHECK_THROWS_AS(is_acute_chordal(e1, e1, e2), std::domain_error);
}

TEST_CASE("acute fraction of random triangles is 1/2") {
    RngStream rng(7);
    const int n = 1'000'000;
    int acute = 0;
    for (int i = 0; i < n; ++i)
        if (is_acute_chordal(sample_uniform(rng), sample_uniform(rng), sample_uniform(rng)))
            ++acute;
    CHECK(std::abs(static_cast<double>(acute) / n - 0.5) < 0.0015);
}

TEST_CASE("is_well_centered") {
    const auto t = regular_tetrahedron();
    CHECK(is_well_centered({t[0], t[1], t[2], t[3]}));

    PointQuad upper{UnitVec{0.1, 0.2, 0.9}, UnitVec{-0.3, 0.1, 0.9}, UnitVec{0.2, -0.4, 0.8},
                    UnitVec{0.0, 0.0, 1.0}};
    CHECK_FALSE(is_well_centered(upper));

    const double s = 1.0 / std::sqrt(3.0);
    CHECK(is_well_centered({e1, e2, e3, UnitVec{-s, -s, -s}}));
}

TEST_CASE("well-centered fraction of random quads is 1/8") {
    RngStream rng(11);
    const int n = 1'000'000;
    int wc = 0;
    for (int i = 0; i < n; ++i)
        if (is_well_centered(sample_quad(rng))) ++wc;
    CHECK(std::abs(static_cast<double>(wc) / n - 0.125) < 0.001);
}

TEST_CASE("well-centered agrees with antipodal-triangle membership") {
    // Independent check: ABCD is well-centered iff D lies in the spherical
    // triangle with vertices antipodal to A, B, C. Membership test: D is on
    // the same side as the triangle interior for all three edge planes.
    auto in_antipodal_triangle = [](const PointQuad& q) {
        const UnitVec va = q.a.antipode(), vb = q.b.antipode(), vc = q.c.antipode();
        const double sa = dot(cross(va, vb), q.d);
        const double sb = dot(cross(vb, vc), q.d);
        const double sc = dot(cross(vc, va), q.d);
        const double ref = dot(cross(va, vb), vc);
        return ref > 0 ? (sa > 0 && sb > 0 && sc > 0) : (sa < 0 && sb < 0 && sc < 0);
    };
    RngStream rng(13);
    int disagreements = 0;
    for (int i = 0; i < 100'000; ++i) {
        const PointQuad q = sample_quad(rng);
        if (is_well_centered(q) != in_antipodal_triangle(q)) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("circumcap_containing") {
    const double s = 1.0 / std::sqrt(3.0);
    const Cap inner = circumcap_containing(e1, e2, e3, UnitVec{s, s, s});
    CHECK(inner.theta == doctest::Approx(std::acos(s)).epsilon(1e-12));
    const Cap outer = circumcap_containing(e1, e2, e3, UnitVec{-s, -s, -s});
    CHECK(outer.theta == doctest::Approx(kPi - std::acos(s)).epsilon(1e-12));

    // Equatorial equilateral triangle, apex at the pole: great-circle boundary.
    const UnitVec q1{1, 0, 0};
    const UnitVec q2{-0.5, std::sqrt(3.0) / 2, 0};
    const UnitVec q3{-0.5, -std::sqrt(3.0) / 2, 0};
    CHECK(circumcap_containing(q1, q2, q3, e3).theta == doctest::Approx(kPi / 2).epsilon(1e-12));

    CHECK_THROWS_AS(circumcap_containing(e1, e1, e2, e3), std::domain_error);
    CHECK_THROWS_AS(circumcap_containing(q1, q2, q3, UnitVec{0, 1, 0}), std::domain_error);
}

TEST_CASE("circumcap boundary passes through the base points") {
    RngStream rng(17);
    for (int i = 0; i < 10'000; ++i) {
        const PointQuad q = sample_quad(rng);
        const Cap cap = circumcap_containing(q.a, q.b, q.c, q.d);
        CHECK(std::abs(angular_distance(cap.center, q.a) - cap.theta) < 1e-9);
        CHECK(std::abs(angular_distance(cap.center, q.b) - cap.theta) < 1e-9);
        CHECK(std::abs(angular_distance(cap.center, q.c) - cap.theta) < 1e-9);
        CHECK(cap.contains(q.d, 1e-9));
        // The two complementary caps have radii summing to pi.
        const Cap other = circumcap_containing(q.a, q.b, q.c, cap.center.antipode());
        CHECK(std::abs(cap.theta + other.theta - kPi) < 1e-9);
    }
}

TEST_CASE("spherical_triangle_area") {
    CHECK(spherical_triangle_area(e1, e2, e3) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(spherical_triangle_area(e1, e1, e2) == 0.0);
    CHECK_THROWS_AS(spherical_triangle_area(e1, e1.antipode(), e2), std::domain_error);

    // Face of the regular tetrahedron: a quarter of the sphere.
    const auto t = regular_tetrahedron();
    CHECK(spherical_triangle_area(t[0], t[1], t[2]) == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("Girard area equals L'Huilier away from degeneracies") {
    RngStream rng(19);
    for (int i = 0; i < 20'000; ++i) {
        const UnitVec a = sample_uniform(rng), b = sample_uniform(rng),
                      c = sample_uniform(rng);
        CHECK(spherical_triangle_area(a, b, c) ==
              doctest::Approx(lhuilier_area(a, b, c)).epsilon(1e-9));
    }
}

TEST_CASE("max_equilateral_area branch and endpoints") {
    CHECK(max_equilateral_area(kPi / 2) == doctest::Approx(2 * kPi).epsilon(1e-12));
    CHECK(max_equilateral_area(constants::theta0) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(max_equilateral_area(kPi) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(max_equilateral_area(1.0), std::domain_error);
    // Continuity probe across the arccot branch point.
    CHECK(max_equilateral_area(kPi / 2 + 1e-9) == doctest::Approx(2 * kPi).epsilon(1e-6));
}

TEST_CASE("inscribed triangle area never exceeds the equilateral maximum") {
    RngStream rng(23);
    for (double theta : {1.7, 1.9, 2.1, 2.4, 2.8}) {
        const double cap = max_equilateral_area(theta);
        const double r = std::sin(theta), z = std::cos(theta);
        int tested = 0;
        while (tested < 20'000) {
            // Random acute inscribed triangle at circumradius sin(theta).
            const double a1 = rng.next_double() * 2 * kPi;
            const double a2 = rng.next_double() * 2 * kPi;
            const double a3 = rng.next_double() * 2 * kPi;
            const UnitVec p1{r * std::cos(a1), r * std::sin(a1), z};
            const UnitVec p2{r * std::cos(a2), r * std::sin(a2), z};
            const UnitVec p3{r * std::cos(a3), r * std::sin(a3), z};
            try {
                if (!is_acute_chordal(p1, p2, p3)) continue;
            } catch (const std::domain_error&) {
                continue;
            }
            ++tested;
            CHECK(spherical_triangle_area(p1, p2, p3) <= cap + 1e-9);
        }
    }
}
