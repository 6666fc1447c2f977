#include "rrq/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rrq {

namespace {

const Real kSqrt5 = std::sqrt(Real(5));

// Below this the value of exp(log) is zero in the working precision.
const Real kLogUnderflow = std::log(std::numeric_limits<Real>::denorm_min()) - 10;

// Neumaier sum of complex logs.
struct LogSum {
    Real re = 0, cre = 0, im = 0, cim = 0;
    void add(Complex v)
    {
        acc(re, cre, v.real());
        acc(im, cim, v.imag());
    }
    static void acc(Real& s, Real& c, Real v)
    {
        const Real t = s + v;
        c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
        s = t;
    }
    Complex value() const { return {re + cre, im + cim}; }
};

// log(1 - exp(z)), accurate both for small |exp(z)| and for exp(z) near 1.
Complex log1m_exp(Complex z)
{
    if (z.imag() == 0) {
        const Real x = z.real();
        return x > -Real(0.693) ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
    }
    const Complex e = std::exp(z);
    if (std::abs(e) < Real(0.5)) {
        // log1p for complex argument w = -e.
        const Complex w = -e;
        const Complex one_plus = Real(1) + w;
        if (one_plus - Real(1) == Complex(0))
            return w;
        return std::log(one_plus) * (w / (one_plus - Real(1)));
    }
    // 1 - e^z = -expm1(z) with expm1 via exp(z) - 1 = 2 e^{z/2} sinh(z/2).
    const Complex m = Real(2) * std::exp(z / Real(2)) * std::sinh(z / Real(2));
    return std::log(-m);
}

} // namespace

Nome::Nome(Complex q) : q_(q), log_q_(q == Complex(0) ? Complex(-kInf) : std::log(q))
{
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
        throw DomainError("nome must be finite");
    if (!(std::abs(q) < 1)) {
        std::ostringstream os;
        os << "nome |q| = " << std::abs(q) << " is not inside the unit disk";
        throw DomainError(os.str());
    }
}

Nome Nome::from_log(Complex log_q)
{
    if (!(log_q.real() < 0))
        throw DomainError("nome log must have negative real part");
    return Nome(std::exp(log_q), log_q);
}

Real rr_at_one()
{
    return (kSqrt5 - 1) / 2;
}

EvalResult eta_quotient(const Nome& q, const EtaQuotient& e, const Truncation& t)
{
    t.validate();
    EvalResult out;
    if (q.is_zero()) {
        if (e.q_power < 0)
            throw PoleError("eta quotient has a pole at q = 0");
        out.value = e.q_power > 0 ? Real(0) : Real(1);
        return out;
    }

    const bool on_fifth_root = e.fifth_root != 0;
    // A pure f(-q^5) power runs directly in q^5.
    const bool on_fifth_power = !on_fifth_root && e.unit == 0;
    const Complex log_base = on_fifth_root ? q.log() / Real(5) : (on_fifth_power ? Real(5) * q.log() : q.log());
    auto exponent = [&](long n) -> Real {
        if (on_fifth_root)
            return e.fifth_root + (n % 5 == 0 ? e.unit : 0) + (n % 25 == 0 ? e.fifth_power : 0);
        if (on_fifth_power)
            return e.fifth_power;
        return e.unit + (n % 5 == 0 ? e.fifth_power : 0);
    };
    const Real emax = std::abs(e.fifth_root) + std::abs(e.unit) + std::abs(e.fifth_power);
    const bool nonnegative = on_fifth_root
        ? (e.fifth_root >= 0 && e.fifth_root + e.unit >= 0 && e.fifth_root + e.unit + e.fifth_power >= 0)
        : (e.unit >= 0 && e.unit + e.fifth_power >= 0);
    const bool real_base = log_base.imag() == 0;

    const Real lr = log_base.real();      // log |s| < 0
    const Real one_minus = -std::expm1(lr); // 1 - |s|

    LogSum sum;
    Real magnitude = 0;
    const Complex prefactor = e.q_power == 0 ? Complex(0) : e.q_power * q.log();
    int n = 1;
    bool converged = false;
    Real tail = kInf;
    for (; n <= t.max_terms; ++n) {
        const Real en = exponent(n);
        if (en != 0) {
            const Complex term = en * log1m_exp(Real(n) * log_base);
            sum.add(term);
            magnitude += std::abs(term);
        }
        // sum_{m > n} |s|^m / (1 - |s|^m) <= |s|^{n+1} / ((1 - |s|)(1 - |s|^{n+1}))
        const Real sn1 = std::exp(Real(n + 1) * lr);
        tail = emax * sn1 / (one_minus * (1 - sn1));
        if (tail <= t.tail_tol) {
            converged = true;
            break;
        }
        const Real upper = sum.value().real() + prefactor.real() + (real_base && nonnegative ? 0 : tail);
        if (upper < kLogUnderflow) {
            out.value = 0;
            out.err_estimate = 0;
            out.terms_used = n;
            out.converged = true;
            return out;
        }
    }
    const Complex total = sum.value() + prefactor;
    out.value = std::exp(total);
    out.terms_used = std::min(n, t.max_terms);
    out.converged = converged;
    const Real log_err = tail + 4 * kEps * (magnitude + std::abs(prefactor) + 1);
    out.err_estimate = std::abs(out.value) * std::expm1(std::min<Real>(log_err, 700));
    return out;
}

EvalResult euler_product_f(const Nome& q, const Truncation& t)
{
    return eta_quotient(q, {.unit = 1}, t);
}

EvalResult pentagonal_series_f(const Nome& q, const Truncation& t)
{
    t.validate();
    EvalResult out;
    if (q.is_zero()) {
        out.value = 1;
        return out;
    }
    const Complex lq = q.log();
    const Real one_minus = -std::expm1(lq.real());
    Complex sum = 1;
    Real err = kEps;
    out.converged = false;
    int k = 1;
    for (; k <= t.max_terms; ++k) {
        const Real e1 = Real(k) * (3 * k - 1) / 2;
        const Real e2 = Real(k) * (3 * k + 1) / 2;
        const Complex pair = std::exp(e1 * lq) + std::exp(e2 * lq);
        sum += (k % 2 ? Real(-1) : Real(1)) * pair;
        err += kEps * std::abs(pair);
        const Real next = Real(k + 1) * (3 * k + 2) / 2;
        const Real tail = 2 * std::exp(next * lq.real()) / one_minus;
        if (tail <= t.tail_tol) {
            out.converged = true;
            err += tail;
            break;
        }
    }
    out.value = sum;
    out.err_estimate = err;
    out.terms_used = std::min(k, t.max_terms);
    return out;
}

EvalResult dedekind_eta(Real tau, const Truncation& t)
{
    if (!(tau > 0))
        throw DomainError("dedekind_eta: tau must be positive");
    constexpr Real pi = std::numbers::pi_v<Real>;
    // e^{-pi tau/12} f(-q) with q = e^{-2 pi tau} is the quotient with q_power 1/24.
    return eta_quotient(Nome::from_log(Complex(-2 * pi * tau)), {.unit = 1, .q_power = Real(1) / 24}, t);
}

namespace {

constexpr EtaQuotient kDegreeOne{.fifth_root = 1, .fifth_power = -1, .q_power = -Real(1) / 5};

// Both roots of R^2 + (1+y) R - 1 = 0, computed without cancellation.
std::pair<Complex, Complex> quadratic_roots(Complex y)
{
    const Complex s = Real(1) + y;
    Complex d = std::sqrt(s * s + Real(4));
    if (std::real(std::conj(s) * d) < 0)
        d = -d;
    const Complex big = -(s + d) / Real(2);
    return {-Real(1) / big, big};
}

Complex cf_backward(Complex q, int depth)
{
    Complex v = 1;
    const Complex lq = std::log(q);
    for (int n = depth; n >= 1; --n)
        v = Real(1) + std::exp(Real(n) * lq) / v;
    return std::exp(lq / Real(5)) / v;
}

Complex pick_nearest(std::pair<Complex, Complex> roots, Complex ref, Real& margin)
{
    const Real d1 = std::abs(roots.first - ref);
    const Real d2 = std::abs(roots.second - ref);
    margin = std::min(d1, d2) / std::max(d1, d2);
    return d1 <= d2 ? roots.first : roots.second;
}

Complex tracked_root(const Nome& q, const Truncation& t, Real max_modulus, Real& y_err, int& terms, Complex& y_out)
{
    constexpr Real anchor = 0.25;
    const Real r = std::abs(q.value());
    if (r > max_modulus) {
        std::ostringstream os;
        os << "rr_value: |q| = " << r << " exceeds the complex-nome limit " << max_modulus;
        throw DomainError(os.str());
    }
    auto y_at = [&](const Nome& p) {
        const EvalResult ye = eta_quotient(p, kDegreeOne, t);
        if (!ye.converged)
            throw ConvergenceError("rr_value: degree-one quotient did not converge");
        y_err = ye.err_estimate;
        terms = ye.terms_used;
        return ye.value;
    };
    Real margin = 0;
    if (r <= anchor) {
        y_out = y_at(q);
        const Complex ref = cf_backward(q.value(), 400);
        const Complex root = pick_nearest(quadratic_roots(y_out), ref, margin);
        if (margin > Real(0.1))
            throw BranchError("rr_value: continued-fraction anchor does not separate the two roots");
        return root;
    }
    const Complex dir = q.value() / r;
    Complex prev = cf_backward(anchor * dir, 400);
    const int steps = static_cast<int>(std::ceil((r - anchor) / Real(0.01)));
    Complex root = prev;
    for (int i = 1; i <= steps; ++i) {
        const Nome p = i == steps ? q : Nome((anchor + (r - anchor) * Real(i) / Real(steps)) * dir);
        y_out = y_at(p);
        root = pick_nearest(quadratic_roots(y_out), prev, margin);
        if (margin > Real(0.5))
            throw BranchError("rr_value: continuity tracking lost the branch");
        prev = root;
    }
    return root;
}

struct RealParts {
    Real y, y_err, root_disc, R;
    int terms;
    bool converged;
};

RealParts real_parts(const Nome& q, const Truncation& t)
{
    const EvalResult ye = eta_quotient(q, kDegreeOne, t);
    const Real y = ye.value.real();
    const Real s = 1 + y;
    const Real d = std::sqrt(s * s + 4);
    return {y, ye.err_estimate, d, 2 / (s + d), ye.terms_used, ye.converged};
}

} // namespace

EvalResult rr_value(const Nome& q, const Truncation& t, Real max_modulus)
{
    EvalResult out;
    if (q.is_zero())
        return out;
    if (q.is_real_unit_interval()) {
        const RealParts p = real_parts(q, t);
        out.value = p.R;
        out.err_estimate = p.y_err * p.R / p.root_disc + 2 * kEps * p.R;
        out.terms_used = p.terms;
        out.converged = p.converged;
        return out;
    }
    Real y_err = 0;
    int terms = 0;
    Complex y;
    const Complex R = tracked_root(q, t, max_modulus, y_err, terms, y);
    out.value = R;
    out.err_estimate = y_err * std::abs(R) / std::abs(R + Real(1) / R) + 4 * kEps * std::abs(R);
    out.terms_used = terms;
    return out;
}

EvalResult rr_cf_oracle(const Nome& q, int depth)
{
    if (depth < 2)
        throw DomainError("rr_cf_oracle: depth must be at least 2");
    EvalResult out;
    if (q.is_zero())
        return out;
    const Complex full = cf_backward(q.value(), depth);
    const Complex half = cf_backward(q.value(), depth / 2);
    out.value = full;
    out.err_estimate = std::abs(full - half) + 4 * kEps * std::abs(full);
    out.terms_used = depth;
    out.converged = out.err_estimate <= Real(1e-13) * std::max<Real>(1, std::abs(full));
    return out;
}

EvalResult u_of_q(const Nome& q, const Truncation& t)
{
    EvalResult out;
    if (q.is_zero())
        throw PoleError("u(q) has a pole at q = 0");
    if (q.is_real_unit_interval()) {
        const RealParts p = real_parts(q, t);
        const Real R1 = rr_at_one();
        // R(1) - R from y without cancellation.
        const Real deficit = 2 * (p.y + p.y * (2 + p.y) / (p.root_disc + kSqrt5)) /
                             ((1 + kSqrt5) * (1 + p.y + p.root_disc));
        const Real R = p.R;
        const Real w = std::pow(R, 5);
        const Real sum4 = R1 * R1 * R1 * R1 + R1 * R1 * R1 * R + R1 * R1 * R * R + R1 * R * R * R + R * R * R * R;
        const Real gap_plus = deficit * sum4;                 // w+ - w
        const Real gap_minus = w + (11 + 5 * kSqrt5) / 2;     // w - w-
        const Real u = gap_plus * gap_minus / w;
        const Real rel_y = p.y > 0 ? p.y_err / p.y : 0;
        out.value = u;
        out.err_estimate = std::abs(u) * (6 * rel_y + 16 * kEps);
        out.terms_used = p.terms;
        out.converged = p.converged;
        return out;
    }
    const EvalResult r = rr_value(q, t);
    const Complex w = std::pow(r.value, 5);
    out.value = Real(1) / w - Real(11) - w;
    out.err_estimate = 5 * std::abs(Real(1) / w + w) * r.err_estimate / std::abs(r.value) + 16 * kEps * std::abs(out.value);
    out.terms_used = r.terms_used;
    out.converged = r.converged;
    return out;
}

EvalResult u_of_q_product(const Nome& q, const Truncation& t)
{
    return eta_quotient(q, {.unit = 6, .fifth_power = -6, .q_power = -1}, t);
}

EvalResult y_of_q(const Nome& q, const Truncation& t)
{
    if (q.is_zero())
        throw PoleError("y(q) has a pole at q = 0");
    return eta_quotient(q, kDegreeOne, t);
}

namespace {

EvalResult log_derivative_kernel(const Nome& q, const Truncation& t)
{
    // f(-q)^5 / (q f(-q^5))
    return eta_quotient(q, {.unit = 5, .fifth_power = -1, .q_power = -1}, t);
}

// R + 1/R for the branch of R in use.
Complex r_plus_inverse(const Nome& q, const Truncation& t)
{
    if (q.is_real_unit_interval()) {
        const RealParts p = real_parts(q, t);
        return p.root_disc;
    }
    const Complex R = rr_value(q, t).value;
    return R + Real(1) / R;
}

} // namespace

EvalResult dlogR_dq(const Nome& q, const Truncation& t)
{
    EvalResult g = log_derivative_kernel(q, t);
    g.value /= Real(5);
    g.err_estimate /= 5;
    return g;
}

EvalResult du_dq(const Nome& q, const Truncation& t)
{
    EvalResult g = log_derivative_kernel(q, t);
    Complex w_sum;
    if (q.is_real_unit_interval()) {
        const Real u = u_of_q(q, t).value.real();
        w_sum = std::sqrt(125 + 22 * u + u * u);
    } else {
        const Complex w = std::pow(rr_value(q, t).value, 5);
        w_sum = w + Real(1) / w;
    }
    g.value = -g.value * w_sum;
    g.err_estimate *= std::abs(w_sum);
    g.err_estimate += 8 * kEps * std::abs(g.value);
    return g;
}

EvalResult dy_dq(const Nome& q, const Truncation& t)
{
    EvalResult g = log_derivative_kernel(q, t);
    const Complex k = r_plus_inverse(q, t);
    g.value = -g.value * k / Real(5);
    g.err_estimate *= std::abs(k) / 5;
    g.err_estimate += 8 * kEps * std::abs(g.value);
    return g;
}

} // namespace rrq
