#include <doctest.h>

#include "rrq/qseries.hpp"
#include "rrq/roots.hpp"

using namespace rrq;

TEST_CASE("real roots of u")
{
    RootSpec spec;
    spec.target_value = 0.5;
    const RealRoot r1 = solve_real(spec);
    CHECK(r1.q == doctest::Approx(0.24076874868836687).epsilon(1e-13));
    CHECK(r1.residual < 1e-12);

    spec.target_value = 1;
    CHECK(solve_real(spec).q == doctest::Approx(0.197950622484033412).epsilon(1e-13));
}

TEST_CASE("y has no real zero")
{
    RootSpec spec;
    spec.target_fn = TargetFn::y;
    spec.target_value = 0;
    CHECK_THROWS_AS(solve_real(spec), NoSignChangeError);
    CHECK(count_sign_changes(TargetFn::y, 0, 0.01, 0.99) == 0);
    CHECK(count_sign_changes(TargetFn::u, 0.5, 0.01, 0.99) == 1);
}

TEST_CASE("complex root at the branch value")
{
    RootSpec spec;
    spec.target_value = Complex(-11, 2);
    spec.seed = Complex(-0.23, -0.17);
    const ComplexRoot r = solve_complex(spec);
    CHECK(r.q.real() == doctest::Approx(-0.23025395732014078).epsilon(1e-12));
    CHECK(r.q.imag() == doctest::Approx(-0.1672892922346135).epsilon(1e-12));
    const Complex u = u_of_q(Nome(r.q)).value;
    CHECK(std::abs(u - Complex(-11, 2)) < 1e-8);
}

TEST_CASE("bad input")
{
    RootSpec spec;
    spec.target_value = 0.5;
    spec.bracket = std::pair{0.5, 0.4};
    CHECK_THROWS_AS(solve_real(spec), DomainError);
    RootSpec c;
    c.target_value = Complex(-11, 2);
    CHECK_THROWS_AS(solve_complex(c), DomainError);
}
