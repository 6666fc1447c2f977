#include <cmath>

#include "rrq/specfun.hpp"

namespace rrq {

namespace {

bool on_cut(Complex v)
{
    return v.imag() == 0 && v.real() >= 1;
}

} // namespace

EvalResult appell_f1(const F1Params& p, const Truncation& t, const QuadratureSpec& spec)
{
    t.validate();
    if (!(p.c.real() > p.a.real() && p.a.real() > 0))
        throw DomainError("appell_f1: Euler route needs Re c > Re a > 0");
    if (on_cut(p.x) || on_cut(p.y))
        throw BranchError("appell_f1: argument on the cut [1, inf)");
    if (p.x == Complex(0) && p.y == Complex(0))
        return {Complex(1), 0, 0, true};

    const Complex am1 = p.a - Real(1);
    const Complex cam1 = p.c - p.a - Real(1);
    auto integrand = [&](const Abscissa& n) -> Complex {
        const Complex lx = std::log(Real(1) - p.x * n.x);
        const Complex ly = std::log(Real(1) - p.y * n.x);
        return std::exp(am1 * std::log(n.to_lo) + cam1 * std::log(n.to_hi) - p.b1 * lx - p.b2 * ly);
    };
    EvalResult r = integrate_nodes(integrand, 0, 1, spec);
    const Complex norm = std::exp(lngamma(p.c) - lngamma(p.a) - lngamma(p.c - p.a));
    r.value *= norm;
    r.err_estimate *= std::abs(norm);
    return r;
}

EvalResult appell_f1_series(const F1Params& p, const Truncation& t)
{
    t.validate();
    if (!(std::abs(p.x) < 1 && std::abs(p.y) < 1))
        throw DomainError("appell_f1_series: needs |x| < 1 and |y| < 1");
    EvalResult out;
    out.converged = false;
    Complex coeff = 1; // (a)_m (b1)_m / ((c)_m m!) x^m
    Complex sum = 0;
    Real err = 0;
    int terms = 0;
    for (int m = 0; m < t.max_terms; ++m) {
        const Complex am = p.a + Real(m), cm = p.c + Real(m);
        const EvalResult row = gauss_2f1_via(HyperParams(am, p.b2, cm, p.y), HyperRoute::series, t);
        const Complex term = coeff * row.value;
        sum += term;
        err += std::abs(coeff) * row.err_estimate;
        terms += row.terms_used;
        if (!row.converged)
            return {sum, kInf, terms, false};
        if (coeff == Complex(0) || (m > 2 && std::abs(term) * 2 <= t.tail_tol * std::abs(sum) * (1 - std::abs(p.x)))) {
            out.converged = true;
            break;
        }
        coeff *= am * (p.b1 + Real(m)) / (cm * Real(m + 1)) * p.x;
    }
    out.value = sum;
    out.err_estimate = err + t.tail_tol * std::abs(sum);
    out.terms_used = terms;
    return out;
}

} // namespace rrq
