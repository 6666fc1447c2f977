#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "rrq/quad.hpp"

using namespace rrq;

TEST_CASE("tanh-sinh handles endpoint singularities")
{
    auto r = integrate_finite([](Real x) { return Complex(1 / std::sqrt(x)); }, 0, 1);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(2).epsilon(1e-13));

    auto l = integrate_finite([](Real x) { return Complex(std::log(x)); }, 0, 1);
    CHECK(l.value.real() == doctest::Approx(-1).epsilon(1e-13));
}

TEST_CASE("reversed limits negate")
{
    auto f = [](Real x) { return Complex(x * x); };
    CHECK(integrate_finite(f, 1, 0).value.real() == doctest::Approx(-1.0 / 3).epsilon(1e-14));
}

TEST_CASE("endpoint distances stay exact near the ends")
{
    auto f = [](const Abscissa& n) { return Complex(1 / std::sqrt(n.to_hi)); };
    CHECK(integrate_nodes(f, 0, 1).value.real() == doctest::Approx(2).epsilon(1e-13));
}

TEST_CASE("gauss-kronrod rule")
{
    QuadratureSpec spec;
    spec.rule = Rule::adaptive_gauss_kronrod;
    auto r = integrate_finite([](Real x) { return Complex(std::exp(x)); }, 0, 1, spec);
    CHECK(r.value.real() == doctest::Approx(std::numbers::e - 1).epsilon(1e-14));
}

TEST_CASE("semi-infinite range")
{
    auto r = integrate_semi_infinite([](Real x) { return Complex(std::exp(-x)); }, 0);
    CHECK(r.value.real() == doctest::Approx(1).epsilon(1e-12));
    auto c = integrate_semi_infinite([](Real x) { return Complex(1 / (1 + x * x)); }, 0);
    CHECK(c.value.real() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    CHECK_THROWS_AS(integrate_semi_infinite([](Real x) { return Complex(1 / (1 + x)); }, 0), DivergenceError);
}

TEST_CASE("non-finite integrand values are rejected")
{
    auto f = [](Real) { return Complex(std::numeric_limits<Real>::quiet_NaN()); };
    CHECK_THROWS_AS(integrate_finite(f, 0, 1), DomainError);
}

TEST_CASE("complex segment")
{
    auto r = integrate_complex_segment([](Complex z) { return z; }, {0, Complex(1, 1)});
    CHECK(std::abs(r.value - Complex(0, 1)) < 1e-14);
}

TEST_CASE("richardson derivatives")
{
    auto d = differentiate([](Real x) { return Complex(std::sin(x)); }, 1, 0.01);
    CHECK(d.value.real() == doctest::Approx(std::cos(1.0)).epsilon(1e-10));
    auto dc = differentiate_complex([](Complex z) { return std::exp(z); }, Complex(0, 1), 0.01);
    CHECK(std::abs(dc.value - std::exp(Complex(0, 1))) < 1e-10);
    CHECK_THROWS_AS(differentiate([](Real x) { return Complex(x); }, 1, 1e-18), DomainError);
}

TEST_CASE("spec validation")
{
    QuadratureSpec s;
    s.max_levels = 0;
    CHECK_THROWS_AS(s.validate(), DomainError);
}
