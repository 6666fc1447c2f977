#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rrq/qseries.hpp"
#include "rrq/quad.hpp"

using namespace rrq;

TEST_CASE("euler product at the origin and against the pentagonal series")
{
    CHECK(euler_product_f(Nome(0.0)).value == Complex(1));
    for (Complex q : {Complex(0.1), Complex(0.5), Complex(0.9), Complex(-0.3, 0.4), Complex(0.2, -0.7)}) {
        const Complex a = euler_product_f(Nome(q)).value;
        const Complex b = pentagonal_series_f(Nome(q)).value;
        CHECK(std::abs(a - b) < 1e-14);
    }
    CHECK(euler_product_f(Nome(0.5)).value.real() == doctest::Approx(0.28878809508660247).epsilon(1e-15));
}

TEST_CASE("nome validation")
{
    CHECK_THROWS_AS(Nome(1.0), DomainError);
    CHECK_THROWS_AS(Nome(Complex(0.6, 0.8)), DomainError);
    CHECK_NOTHROW(Nome(-0.99));
    const Nome tiny = Nome::from_log(Complex(-2000));
    CHECK_FALSE(tiny.is_zero());
    CHECK(tiny.is_real_unit_interval());
    CHECK(Nome(0.0).is_zero());
}

TEST_CASE("truncation rejects bad settings")
{
    Truncation t;
    t.max_terms = 0;
    CHECK_THROWS_AS(t.validate(), DomainError);
}

TEST_CASE("dedekind eta at tau = 1")
{
    // Gamma(1/4) / (2 pi^{3/4})
    CHECK(dedekind_eta(1).value.real() == doctest::Approx(0.76822542232605665).epsilon(1e-15));
    CHECK_THROWS_AS(dedekind_eta(0), DomainError);
}

TEST_CASE("R agrees with the continued fraction")
{
    for (Real q : {0.01, 0.1, 0.5, 0.9, 0.97}) {
        const Complex r = rr_value(Nome(q)).value;
        const EvalResult cf = rr_cf_oracle(Nome(q), 400);
        REQUIRE(cf.converged);
        CHECK(std::abs(r - cf.value) < 1e-14);
    }
    CHECK(rr_value(Nome(0.1)).value.real() == doctest::Approx(0.57411382893191953).epsilon(1e-15));
}

TEST_CASE("complex R follows the continued fraction branch")
{
    for (Complex q : {Complex(-0.23, -0.17), Complex(-0.5, 0.1), Complex(0.3, 0.6), Complex(-0.9, 0)}) {
        const Complex r = rr_value(Nome(q)).value;
        const Complex cf = rr_cf_oracle(Nome(q), 400).value;
        CHECK(std::abs(r - cf) < 1e-13);
    }
    CHECK_THROWS_AS(rr_value(Nome(Complex(0.0, 0.99))), DomainError);
}

TEST_CASE("u and y: both routes and the range")
{
    for (Real q : {0.05, 0.3, 0.5, 0.8, 0.95}) {
        const Real u1 = u_of_q(Nome(q)).value.real();
        const Real u2 = u_of_q_product(Nome(q)).value.real();
        CHECK(std::abs(u1 - u2) <= 1e-13 * std::max(1.0, std::abs(u2)));
        CHECK(y_of_q(Nome(q)).value.real() > 0);
        const Real R = rr_value(Nome(q)).value.real();
        CHECK(R > 0);
        CHECK(R < rr_at_one());
    }
    CHECK(u_of_q(Nome(0.5)).value.real() == doctest::Approx(0.00141209346939503).epsilon(1e-13));
}

TEST_CASE("closed-form derivatives match finite differences")
{
    const Real q = 0.3;
    auto fd = [&](auto f) { return differentiate([&](Real x) { return Complex(f(x)); }, q, 0.003).value.real(); };
    auto logR = [](Real x) { return std::log(rr_value(Nome(x)).value.real()); };
    auto u = [](Real x) { return u_of_q(Nome(x)).value.real(); };
    auto y = [](Real x) { return y_of_q(Nome(x)).value.real(); };
    CHECK(dlogR_dq(Nome(q)).value.real() == doctest::Approx(fd(logR)).epsilon(1e-7));
    CHECK(du_dq(Nome(q)).value.real() == doctest::Approx(fd(u)).epsilon(1e-7));
    CHECK(dy_dq(Nome(q)).value.real() == doctest::Approx(fd(y)).epsilon(1e-7));
}

TEST_CASE("eta quotient pole and underflow")
{
    CHECK_THROWS_AS(eta_quotient(Nome(0.0), {.unit = 1, .q_power = -1}), PoleError);
    const EvalResult r = eta_quotient(Nome(1 - 1e-9), {.unit = 4});
    CHECK(r.converged);
    CHECK(r.value == Complex(0));
}
