#include <algorithm>
#include <cmath>
#include <sstream>

#include "rrq/specfun.hpp"

namespace rrq {

namespace {

constexpr Real kRouteRadius = 0.8;

bool nonpositive_integer(Complex v)
{
    return v.imag() == 0 && v.real() <= 0 && v.real() == std::floor(v.real());
}

bool is_integer(Complex v)
{
    return v.imag() == 0 && v.real() == std::round(v.real());
}

bool on_cut_one_to_inf(Complex z)
{
    return z.imag() == 0 && z.real() >= 1;
}

// Direct Gauss series; also exact for terminating parameters.
EvalResult series(Complex a, Complex b, Complex c, Complex z, const Truncation& t)
{
    EvalResult out;
    if (z == Complex(0)) {
        out.value = 1;
        return out;
    }
    const bool terminating = nonpositive_integer(a) || nonpositive_integer(b);
    if (!terminating && !(std::abs(z) < 1))
        throw NoRouteError("2F1 series: |z| >= 1");
    Complex sum = 1;
    Complex term = 1;
    Real magnitude = 1;
    out.converged = false;
    int n = 0;
    for (; n < t.max_terms; ++n) {
        const Complex an = a + Real(n), bn = b + Real(n), cn = c + Real(n);
        term *= an * bn / (cn * Real(n + 1)) * z;
        sum += term;
        magnitude += std::abs(term);
        if (term == Complex(0)) {
            out.converged = true;
            break;
        }
        // Ratio of the next term; once below 1 and settled, the tail is geometric.
        const Real ratio = std::abs((an + Real(1)) * (bn + Real(1)) / ((cn + Real(1)) * Real(n + 2)) * z);
        const Real rho = std::max(ratio, std::abs(z));
        if (rho < 1 && Real(n) > std::abs(a) + std::abs(b) + std::abs(c)) {
            const Real tail = std::abs(term) * rho / (1 - rho);
            if (tail <= t.tail_tol * std::abs(sum)) {
                out.converged = true;
                break;
            }
        }
    }
    out.value = sum;
    out.err_estimate = 2 * kEps * magnitude + t.tail_tol * std::abs(sum);
    out.terms_used = n + 1;
    return out;
}

EvalResult pfaff(const HyperParams& p, const Truncation& t)
{
    if (p.z == Complex(1))
        throw NoRouteError("2F1 Pfaff: z = 1");
    const Complex w = p.z / (p.z - Real(1));
    EvalResult r = series(p.a, p.c - p.b, p.c, w, t);
    const Complex factor = std::pow(Real(1) - p.z, -p.a);
    r.value *= factor;
    r.err_estimate *= std::abs(factor);
    return r;
}

EvalResult one_minus_z(const HyperParams& p, const Truncation& t)
{
    const Complex s = p.c - p.a - p.b;
    if (is_integer(s))
        throw NoRouteError("2F1 1-z connection: c - a - b is an integer");
    const Complex w = Real(1) - p.z;
    const Complex lg_c = lngamma(p.c);
    const Complex g1 = std::exp(lg_c + lngamma(s)) * rgamma(p.c - p.a) * rgamma(p.c - p.b);
    const Complex g2 = std::exp(lg_c + lngamma(-s)) * rgamma(p.a) * rgamma(p.b);
    EvalResult out;
    Complex value = 0;
    Real err = 0;
    int terms = 0;
    bool conv = true;
    if (g1 != Complex(0)) {
        const EvalResult r = series(p.a, p.b, Real(1) - s, w, t);
        value += g1 * r.value;
        err += std::abs(g1) * r.err_estimate;
        terms += r.terms_used;
        conv = conv && r.converged;
    }
    if (g2 != Complex(0)) {
        const Complex pw = std::pow(w, s);
        const EvalResult r = series(p.c - p.a, p.c - p.b, Real(1) + s, w, t);
        value += g2 * pw * r.value;
        err += std::abs(g2 * pw) * r.err_estimate;
        terms += r.terms_used;
        conv = conv && r.converged;
    }
    out.value = value;
    out.err_estimate = err + 8 * kEps * (std::abs(g1) + std::abs(g2));
    out.terms_used = terms;
    out.converged = conv;
    return out;
}

// c = a + b: logarithmic limit of the 1 - z connection.
EvalResult one_minus_z_log(const HyperParams& p, const Truncation& t)
{
    if (p.c - p.a - p.b != Complex(0))
        throw NoRouteError("2F1 logarithmic connection needs c = a + b");
    if (nonpositive_integer(p.a) || nonpositive_integer(p.b))
        throw NoRouteError("2F1 logarithmic connection: terminating parameters");
    const Complex w = Real(1) - p.z;
    if (!(std::abs(w) < 1))
        throw NoRouteError("2F1 logarithmic connection: |1 - z| >= 1");
    const Complex prefactor = std::exp(lngamma(p.c)) * rgamma(p.a) * rgamma(p.b);
    const Complex log_w = std::log(w);
    Complex psi1 = digamma(Complex(1));
    Complex psia = digamma(p.a);
    Complex psib = digamma(p.b);
    Complex coeff = 1; // (a)_n (b)_n / (n!)^2 w^n
    Complex sum = 0;
    Real magnitude = 0;
    EvalResult out;
    out.converged = false;
    int n = 0;
    for (; n < t.max_terms; ++n) {
        const Complex term = coeff * (Real(2) * psi1 - psia - psib - log_w);
        sum += term;
        magnitude += std::abs(term);
        if (n > 2 && std::abs(term) * (1 + std::abs(w)) / (1 - std::abs(w)) <= t.tail_tol * std::abs(sum)) {
            out.converged = true;
            break;
        }
        const Complex an = p.a + Real(n), bn = p.b + Real(n);
        coeff *= an * bn / Real((n + 1) * (n + 1)) * w;
        psi1 += Real(1) / Real(n + 1);
        psia += Real(1) / an;
        psib += Real(1) / bn;
    }
    out.value = prefactor * sum;
    out.err_estimate = std::abs(prefactor) * (4 * kEps * magnitude + t.tail_tol * std::abs(sum));
    out.terms_used = n + 1;
    return out;
}

EvalResult euler_integral(const HyperParams& p, const QuadratureSpec& spec)
{
    Complex a = p.a, b = p.b;
    auto valid = [&](Complex bb) { return p.c.real() > bb.real() && bb.real() > 0; };
    if (!valid(b)) {
        if (!valid(a))
            throw NoRouteError("2F1 Euler integral needs Re c > Re b > 0 for b or a");
        std::swap(a, b);
    }
    if (on_cut_one_to_inf(p.z))
        throw NoRouteError("2F1 Euler integral: z on the cut [1, inf)");
    const Complex bm1 = b - Real(1);
    const Complex cbm1 = p.c - b - Real(1);
    auto integrand = [&](const Abscissa& n) -> Complex {
        const Real t = n.x;
        const Complex base = Real(1) - p.z * t;
        return std::exp(bm1 * std::log(n.to_lo) + cbm1 * std::log(n.to_hi) - a * std::log(base));
    };
    EvalResult r = integrate_nodes(integrand, 0, 1, spec);
    const Complex norm = std::exp(lngamma(p.c) - lngamma(b) - lngamma(p.c - b));
    r.value *= norm;
    r.err_estimate *= std::abs(norm);
    return r;
}

} // namespace

HyperParams::HyperParams(Complex a_, Complex b_, Complex c_, Complex z_) : a(a_), b(b_), c(c_), z(z_)
{
    if (nonpositive_integer(c))
        throw DomainError("2F1: c is a nonpositive integer");
}

const char* to_string(HyperRoute r)
{
    switch (r) {
    case HyperRoute::series: return "series";
    case HyperRoute::pfaff: return "pfaff";
    case HyperRoute::one_minus_z: return "one_minus_z";
    case HyperRoute::one_minus_z_log: return "one_minus_z_log";
    case HyperRoute::euler_integral: return "euler_integral";
    }
    return "?";
}

HyperRoute gauss_2f1_route(const HyperParams& p)
{
    if (std::abs(p.z) <= kRouteRadius || nonpositive_integer(p.a) || nonpositive_integer(p.b))
        return HyperRoute::series;
    if (p.z != Complex(1) && std::abs(p.z / (p.z - Real(1))) <= kRouteRadius)
        return HyperRoute::pfaff;
    if (std::abs(Real(1) - p.z) <= kRouteRadius) {
        const Complex s = p.c - p.a - p.b;
        if (!is_integer(s))
            return HyperRoute::one_minus_z;
        if (s == Complex(0))
            return HyperRoute::one_minus_z_log;
    }
    const bool euler_ok = (p.c.real() > p.b.real() && p.b.real() > 0) || (p.c.real() > p.a.real() && p.a.real() > 0);
    if (euler_ok && !on_cut_one_to_inf(p.z))
        return HyperRoute::euler_integral;
    std::ostringstream os;
    os << "2F1: no valid route for z = " << p.z;
    throw NoRouteError(os.str());
}

EvalResult gauss_2f1_via(const HyperParams& p, HyperRoute route, const Truncation& t, const QuadratureSpec& spec)
{
    t.validate();
    switch (route) {
    case HyperRoute::series: return series(p.a, p.b, p.c, p.z, t);
    case HyperRoute::pfaff: return pfaff(p, t);
    case HyperRoute::one_minus_z: return one_minus_z(p, t);
    case HyperRoute::one_minus_z_log: return one_minus_z_log(p, t);
    case HyperRoute::euler_integral: return euler_integral(p, spec);
    }
    throw NoRouteError("2F1: unknown route");
}

EvalResult gauss_2f1(const HyperParams& p, const Truncation& t)
{
    return gauss_2f1_via(p, gauss_2f1_route(p), t);
}

} // namespace rrq
