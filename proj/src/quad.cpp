#include "rrq/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

namespace rrq {

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0) || !(rel_tol > 0) || max_levels < 1)
        throw DomainError("quadrature spec: tolerances must be positive and max_levels >= 1");
}

namespace {

// Neumaier compensated sum over complex values.
class CompensatedSum {
public:
    void add(Complex v)
    {
        add_part(re_, cre_, v.real());
        add_part(im_, cim_, v.imag());
    }
    Complex value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add_part(Real& s, Real& c, Real v)
    {
        const Real t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    Real re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

Complex guarded(const NodeIntegrand& f, const Abscissa& node)
{
    const Complex v = f(node);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream os;
        os << "integrand is not finite at x = " << node.x;
        throw DomainError(os.str());
    }
    return v;
}

bool within(Real err, Complex value, const QuadratureSpec& spec)
{
    return err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
}

EvalResult tanh_sinh(const NodeIntegrand& f, Real a, Real b, const QuadratureSpec& spec)
{
    constexpr Real half_pi = std::numbers::pi_v<Real> / 2;
    const Real len = b - a;
    const Real half = len / 2;
    // Beyond this the endpoint gap underflows in double.
    constexpr Real t_max = 6.5;

    int evaluations = 0;
    auto node_pair = [&](Real t, CompensatedSum& sum) {
        const Real s = half_pi * std::sinh(t);
        const Real gap = 2 / (std::exp(2 * s) + 1); // 1 - tanh(s)
        const Real cs = std::cosh(s);
        const Real w = half_pi * std::cosh(t) / (cs * cs);
        if (gap * half <= std::numeric_limits<Real>::min() || w == 0)
            return false;
        const Real near = half * gap;
        const Real far = len - near;
        sum.add(w * guarded(f, {b - near, far, near}));
        sum.add(w * guarded(f, {a + near, near, far}));
        evaluations += 2;
        return true;
    };

    CompensatedSum total;
    total.add(half_pi * guarded(f, {a + half, half, half}));
    evaluations = 1;
    for (int k = 1; k * 1.0 <= t_max; ++k)
        if (!node_pair(k, total))
            break;

    Real h = 1;
    Complex prev = half * h * total.value();
    EvalResult out;
    out.value = prev;
    out.err_estimate = kInf;
    out.converged = false;
    for (int level = 1; level <= spec.max_levels; ++level) {
        h /= 2;
        for (Real t = h; t <= t_max; t += 2 * h)
            if (!node_pair(t, total))
                break;
        const Complex cur = half * h * total.value();
        const Real err = std::abs(cur - prev);
        out.value = cur;
        out.err_estimate = err;
        out.terms_used = evaluations;
        if (level >= 3 && within(err, cur, spec)) {
            out.converged = true;
            break;
        }
        prev = cur;
    }
    return out;
}

// 15-point Gauss-Kronrod with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    Real lo, hi;
    Complex value;
    Real err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const NodeIntegrand& f, Real a, Real b, Real lo, Real hi, int& evals)
{
    const Real c = (lo + hi) / 2;
    const Real r = (hi - lo) / 2;
    auto at = [&](Real off) {
        // Distances measured from the panel's own endpoints where they coincide
        // with the outer interval.
        const Real x = c + off;
        const Real dlo = (lo == a) ? r + off : x - a;
        const Real dhi = (hi == b) ? r - off : b - x;
        ++evals;
        return guarded(f, {x, dlo, dhi});
    };
    const Complex fc = at(0);
    Complex kron = Real(kWgk[7]) * fc;
    Complex gauss = Real(kWg[3]) * fc;
    for (int j = 0; j < 7; ++j) {
        const Real off = r * Real(kXgk[j]);
        const Complex s = at(-off) + at(off);
        kron += Real(kWgk[j]) * s;
        if (j % 2 == 1)
            gauss += Real(kWg[j / 2]) * s;
    }
    kron *= r;
    gauss *= r;
    return {lo, hi, kron, std::abs(kron - gauss)};
}

EvalResult gauss_kronrod(const NodeIntegrand& f, Real a, Real b, const QuadratureSpec& spec)
{
    const int max_panels = 50 * spec.max_levels;
    int evals = 0;
    std::priority_queue<Panel> heap;
    heap.push(gk15(f, a, b, a, b, evals));
    Complex total = heap.top().value;
    Real err = heap.top().err;
    while (!within(err, total, spec) && static_cast<int>(heap.size()) < max_panels) {
        const Panel worst = heap.top();
        heap.pop();
        const Real mid = (worst.lo + worst.hi) / 2;
        if (mid <= worst.lo || mid >= worst.hi)
            break;
        heap.push(gk15(f, a, b, worst.lo, mid, evals));
        heap.push(gk15(f, a, b, mid, worst.hi, evals));
        CompensatedSum sum;
        err = 0;
        auto copy = heap;
        while (!copy.empty()) {
            sum.add(copy.top().value);
            err += copy.top().err;
            copy.pop();
        }
        total = sum.value();
    }
    EvalResult out;
    out.value = total;
    out.err_estimate = err;
    out.terms_used = evals;
    out.converged = within(err, total, spec);
    return out;
}

} // namespace

EvalResult integrate_nodes(const NodeIntegrand& f, Real a, Real b, const QuadratureSpec& spec)
{
    spec.validate();
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integrate_finite: endpoints must be finite");
    if (a == b)
        return {};
    if (b < a) {
        auto flipped = [&](const Abscissa& n) { return f({n.x, n.to_hi, n.to_lo}); };
        EvalResult r = integrate_nodes(flipped, b, a, spec);
        r.value = -r.value;
        return r;
    }
    return spec.rule == Rule::tanh_sinh ? tanh_sinh(f, a, b, spec) : gauss_kronrod(f, a, b, spec);
}

EvalResult integrate_finite(const RealIntegrand& f, Real a, Real b, const QuadratureSpec& spec)
{
    return integrate_nodes([&](const Abscissa& n) { return f(n.x); }, a, b, spec);
}

EvalResult integrate_semi_infinite(const RealIntegrand& f, Real a, const QuadratureSpec& spec)
{
    if (!std::isfinite(a))
        throw DomainError("integrate_semi_infinite: lower limit must be finite");

    // Tail probe: x|f(x)| must decay for the integral to exist.
    const Real p1 = 1e8 * std::abs(f(a + Real(1e8)));
    const Real p2 = 1e16 * std::abs(f(a + Real(1e16)));
    if (p2 > 1e-12 && p2 >= Real(0.5) * p1)
        throw DivergenceError("integrate_semi_infinite: integrand does not decay faster than 1/x");

    auto mapped = [&](const Abscissa& n) -> Complex {
        // Past x ~ 1e150 the jacobian overflows; any integrable tail is negligible there.
        if (n.to_hi < 1e-150)
            return 0;
        const Real x = a + n.to_lo / n.to_hi;
        const Complex v = f(x);
        if (v == Complex(0))
            return 0;
        return v / n.to_hi / n.to_hi;
    };
    EvalResult r = integrate_nodes(mapped, 0, 1, spec);
    if (!std::isfinite(std::abs(r.value)))
        throw DivergenceError("integrate_semi_infinite: level sums are not finite");
    return r;
}

EvalResult integrate_complex_segment(const ComplexIntegrand& f, const PathSegment& path,
                                     const QuadratureSpec& spec)
{
    const Complex dz = path.z1 - path.z0;
    auto g = [&](const Abscissa& n) {
        const Complex z = n.to_lo <= n.to_hi ? path.z0 + n.to_lo * dz : path.z1 - n.to_hi * dz;
        return f(z) * dz;
    };
    return integrate_nodes(g, 0, 1, spec);
}

namespace {

template <class Arg, class F>
Derivative richardson(const F& f, Arg x, Real h)
{
    if (!(h > 0) || h <= 8 * kEps * std::max<Real>(1, std::abs(x)))
        throw DomainError("differentiate: step underflow");
    auto d4 = [&](Real s) {
        return (f(x - 2 * s) - Real(8) * f(x - s) + Real(8) * f(x + s) - f(x + 2 * s)) / (12 * s);
    };
    const Complex coarse = d4(h);
    const Complex fine = d4(h / 2);
    return {fine + (fine - coarse) / Real(15), std::abs(fine - coarse) / 15};
}

} // namespace

Derivative differentiate(const std::function<Complex(Real)>& f, Real x, Real h)
{
    return richardson(f, x, h);
}

Derivative differentiate_complex(const ComplexIntegrand& f, Complex z, Real h)
{
    return richardson(f, z, h);
}

} // namespace rrq
