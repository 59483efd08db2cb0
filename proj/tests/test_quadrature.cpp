#include <cmath>

#include "capcover/quadrature.hpp"
#include "doctest.h"

using namespace capcover;
using std::numbers::pi;

TEST_CASE("polynomials and smooth integrands") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, pi) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
          doctest::Approx(std::sqrt(pi)).epsilon(1e-12));
    CHECK(integrate([](double) { return 1.0; }, 3.0, 3.0) == 0.0);
}

TEST_CASE("oscillatory integrand needs and gets subdivision") {
    const double v = integrate([](double x) { return std::cos(50.0 * x); }, 0.0, 1.0);
    CHECK(v == doctest::Approx(std::sin(50.0) / 50.0).epsilon(1e-11));
}

TEST_CASE("integrable endpoint singularity converges") {
    const double v = integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-30, 1.0,
                               {1e-9, 1e-9, 1 << 20});
    CHECK(v == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("subdivision budget exhaustion reports the best estimate") {
    QuadratureSpec tiny{1e-16, 0.0, 4};
    CHECK_THROWS_AS(integrate([](double x) { return std::cos(50.0 * x); }, 0.0, 10.0, tiny),
                    ConvergenceError);
    try {
        integrate([](double x) { return std::cos(50.0 * x); }, 0.0, 10.0, tiny);
    } catch (const ConvergenceError& e) {
        CHECK(std::abs(e.best - std::sin(500.0) / 50.0) < 1.0);
        CHECK(e.error_bound > 0.0);
    }
}
