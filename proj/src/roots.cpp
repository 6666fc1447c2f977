#include "rrq/roots.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "rrq/qseries.hpp"

namespace rrq {

const char* to_string(TargetFn fn)
{
    return fn == TargetFn::u ? "u" : "y";
}

namespace {

Complex eval_fn(TargetFn fn, const Nome& q)
{
    return checked(fn == TargetFn::u ? u_of_q(q) : y_of_q(q), to_string(fn));
}

Complex eval_derivative(TargetFn fn, const Nome& q)
{
    return checked(fn == TargetFn::u ? du_dq(q) : dy_dq(q), "derivative");
}

// u and y are positive on (0,1) even where their values underflow, so a
// nonpositive target is always below them.
int sign_of(TargetFn fn, Real q, Real target)
{
    if (target <= 0)
        return 1;
    const Real d = eval_fn(fn, Nome(q)).real() - target;
    return (d > 0) - (d < 0);
}

Real scaled_tol(Real tol, Complex target)
{
    return tol * std::max<Real>(1, std::abs(target));
}

} // namespace

int count_sign_changes(TargetFn fn, Real target, Real lo, Real hi, int points)
{
    if (points < 2 || !(lo < hi))
        throw DomainError("count_sign_changes: need at least two points and lo < hi");
    int changes = 0;
    int prev = sign_of(fn, lo, target);
    for (int i = 1; i < points; ++i) {
        const int s = sign_of(fn, lo + (hi - lo) * Real(i) / Real(points - 1), target);
        if (s != 0 && prev != 0 && s != prev)
            ++changes;
        if (s != 0)
            prev = s;
    }
    return changes;
}

RealRoot solve_real(const RootSpec& spec)
{
    if (spec.target_value.imag() != 0)
        throw DomainError("solve_real: target must be real");
    const Real target = spec.target_value.real();
    auto [lo, hi] = spec.bracket.value_or(std::pair<Real, Real>{1e-6, 0.999});
    if (!(0 < lo && lo < hi && hi < 1))
        throw DomainError("solve_real: bracket must satisfy 0 < lo < hi < 1");

    int s_lo = sign_of(spec.target_fn, lo, target);
    const int s_hi = sign_of(spec.target_fn, hi, target);
    if (s_lo == 0)
        return {lo, 0, 0};
    if (s_hi == 0)
        return {hi, 0, 0};
    if (s_lo == s_hi) {
        std::ostringstream os;
        os << to_string(spec.target_fn) << "(q) - " << target << " has no sign change on [" << lo << ", " << hi
           << "]";
        if (target <= 0)
            os << "; " << to_string(spec.target_fn) << " is positive on (0,1)";
        throw NoSignChangeError(os.str());
    }

    int iterations = 0;
    while (hi - lo > 1e-4) {
        const Real mid = (lo + hi) / 2;
        const int s = sign_of(spec.target_fn, mid, target);
        ++iterations;
        if (s == 0)
            return {mid, 0, iterations};
        (s == s_lo ? lo : hi) = mid;
    }

    Real q = (lo + hi) / 2;
    for (int it = 0; it < spec.max_iter; ++it, ++iterations) {
        const Nome nq(q);
        const Real g = eval_fn(spec.target_fn, nq).real() - target;
        const int s = (g > 0) - (g < 0);
        if (s == 0)
            break;
        (s == s_lo ? lo : hi) = q;
        const Real dg = eval_derivative(spec.target_fn, nq).real();
        Real next = q - g / dg;
        if (!(next > lo && next < hi) || std::abs(next - q) > (hi - lo) / 2)
            next = (lo + hi) / 2;
        const bool done = std::abs(next - q) <= 4 * kEps * q;
        q = next;
        if (done || hi - lo <= 4 * kEps * q)
            break;
    }
    const Real residual = std::abs(eval_fn(spec.target_fn, Nome(q)).real() - target);
    if (!(residual < scaled_tol(spec.tol, target))) {
        std::ostringstream os;
        os << "solve_real: residual " << residual << " above tolerance at q = " << q;
        throw ToleranceError(os.str());
    }
    return {q, residual, iterations};
}

ComplexRoot solve_complex(const RootSpec& spec)
{
    if (!spec.seed)
        throw DomainError("solve_complex: a seed is required");
    Complex q = *spec.seed;
    if (!(std::abs(q) < 1))
        throw DomainError("solve_complex: seed outside the unit disk");
    const Complex t = spec.target_value;

    // Residual function and its derivative in the coordinate Newton runs on.
    std::function<std::pair<Complex, Complex>(const Nome&)> step_pair;
    if (spec.target_fn == TargetFn::u) {
        const Complex w_seed = std::pow(checked(rr_value(Nome(q)), "R"), 5);
        const Complex b = Real(11) + t;
        const Complex d = std::sqrt(b * b + Real(4));
        const Complex r1 = (-b + d) / Real(2), r2 = (-b - d) / Real(2);
        const Complex w_target = std::abs(r1 - w_seed) <= std::abs(r2 - w_seed) ? r1 : r2;
        step_pair = [w_target](const Nome& p) {
            const Complex w = std::pow(checked(rr_value(p), "R"), 5);
            const Complex dw = Real(5) * w * checked(dlogR_dq(p), "dlogR");
            return std::pair{w - w_target, dw};
        };
    } else {
        step_pair = [t](const Nome& p) {
            return std::pair{checked(y_of_q(p), "y") - t, checked(dy_dq(p), "dy")};
        };
    }

    int iterations = 0;
    bool settled = false;
    for (; iterations < spec.max_iter && !settled; ++iterations) {
        const auto [h, dh] = step_pair(Nome(q));
        if (h == Complex(0))
            break;
        Complex step = -h / dh;
        if (!std::isfinite(std::abs(step)))
            throw DivergenceError("solve_complex: derivative vanished");
        int damp = 0;
        while (!(std::abs(q + step) < Real(0.98))) {
            step /= Real(2);
            if (++damp > 60)
                throw DivergenceError("solve_complex: iterate left the disk");
        }
        q += step;
        settled = std::abs(step) <= 8 * kEps * std::max<Real>(1, std::abs(q));
    }
    if (!settled && iterations >= spec.max_iter)
        throw DivergenceError("solve_complex: no convergence within max_iter");
    if (!(std::abs(q) < 1))
        throw DomainError("solve_complex: root outside the unit disk");
    const Real residual = std::abs(eval_fn(spec.target_fn, Nome(q)) - t);
    if (!(residual < scaled_tol(spec.tol, t))) {
        std::ostringstream os;
        os << "solve_complex: residual " << residual << " above tolerance";
        throw ToleranceError(os.str());
    }
    return {q, residual, iterations};
}

} // namespace rrq
