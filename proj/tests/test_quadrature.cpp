#include <doctest.h>

#include <cmath>

#include "tricontain/geometry.hpp"
#include "tricontain/quadrature.hpp"

using namespace tricontain;

TEST_CASE("gl16 panel is exact on polynomials up to degree 31") {
    // A single 16-node Gauss panel integrates degree <= 31 exactly; check a
    // few representative powers over an asymmetric interval.
    const double a = -0.7, b = 1.9;
    for (int k : {0, 1, 2, 7, 16, 25, 31}) {
        auto f = [k](double x) { return std::pow(x, k); };
        const double exact =
            (std::pow(b, k + 1) - std::pow(a, k + 1)) / static_cast<double>(k + 1);
        const double got = detail::gl16_panel(f, a, b);
        CHECK(got == doctest::Approx(exact).epsilon(1e-13));
    }
}

TEST_CASE("adaptive integrate reproduces known integrals") {
    QuadOptions opts;
    opts.abs_tol = 1e-12;

    SUBCASE("sin over [0, pi]") {
        QuadResult r = integrate([](double x) { return std::sin(x); }, 0.0, kPi, opts);
        CHECK(std::abs(r.value - 2.0) < 1e-12);
        CHECK(r.error < 1e-10);
    }
    SUBCASE("1/(1+x^2) over [0, 1] = pi/4") {
        QuadResult r =
            integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, opts);
        CHECK(std::abs(r.value - kPi / 4.0) < 1e-12);
    }
    SUBCASE("kinked |x - 0.3| over [0, 1] converges despite the corner") {
        QuadResult r = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, opts);
        const double exact = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
        CHECK(std::abs(r.value - exact) < 1e-11);
    }
    SUBCASE("empty interval is zero") {
        QuadResult r = integrate([](double x) { return std::exp(x); }, 2.0, 2.0, opts);
        CHECK(r.value == 0.0);
    }
}

TEST_CASE("integrate_panels splits a kinked integrand at the kink") {
    // Density-style integrand with a corner at pi: panels aligned with the
    // kink keep the adaptive splitter out of trouble.
    auto f = [](double t) { return t < kPi ? std::sin(t) : 1.0; };
    std::vector<double> pts = {0.0, kPi, kTwoPi};
    QuadResult r = integrate_panels(f, pts, {1e-12, 200000, 48});
    CHECK(std::abs(r.value - (2.0 + kPi)) < 1e-11);
}

TEST_CASE("panel budget exhaustion raises QuadratureError") {
    // A discontinuity off the dyadic grid cannot meet an absurd tolerance
    // within a tiny budget.
    QuadOptions opts;
    opts.abs_tol = 1e-300;
    opts.max_panels = 64;
    auto step = [](double x) { return x < 0.337 ? 0.0 : 1.0; };
    CHECK_THROWS_AS(integrate(step, 0.0, 1.0, opts), QuadratureError);
}

TEST_CASE("golden_min finds interior minima") {
    // Position accuracy from function values alone is limited to about
    // sqrt(machine epsilon); 1e-7 leaves a small margin over that.
    const double x0 = golden_min([](double x) { return (x - 1.3) * (x - 1.3); }, 0.0, 4.0);
    CHECK(std::abs(x0 - 1.3) < 1e-7);
    const double x1 = golden_min([](double x) { return std::cos(x); }, 2.0, 4.5);
    CHECK(std::abs(x1 - kPi) < 1e-7);
}

TEST_CASE("bisect_root solves monotone equations and rejects non-straddles") {
    const double r = bisect_root([](double x) { return x * x * x - 2.0; }, 0.0, 2.0);
    CHECK(std::abs(r - std::cbrt(2.0)) < 1e-12);
    CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    DomainError);
}
