#include <algorithm>
#include <cmath>
#include <numbers>

#include "rrq/specfun.hpp"

namespace rrq {

namespace {

constexpr Real kSpread = 1e-10;
constexpr int kMaxDuplications = 200;

void check_cut(Complex v, const char* who)
{
    if (v.imag() == 0 && v.real() < 0)
        throw BranchError(std::string(who) + ": argument on the negative real axis");
}

Real spread(Complex a, Complex x, Complex y, Complex z)
{
    return std::max({std::abs(a - x), std::abs(a - y), std::abs(a - z)}) / std::abs(a);
}

} // namespace

Complex carlson_rf(Complex x, Complex y, Complex z)
{
    for (Complex v : {x, y, z})
        check_cut(v, "carlson_rf");
    const int zeros = (x == Complex(0)) + (y == Complex(0)) + (z == Complex(0));
    if (zeros > 1)
        throw PoleError("carlson_rf: more than one zero argument");
    Complex a = (x + y + z) / Real(3);
    for (int it = 0; spread(a, x, y, z) >= kSpread; ++it) {
        if (it == kMaxDuplications)
            throw ConvergenceError("carlson_rf: duplication did not contract");
        const Complex sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const Complex lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / Real(4);
        y = (y + lam) / Real(4);
        z = (z + lam) / Real(4);
        a = (x + y + z) / Real(3);
    }
    const Complex dx = (a - x) / a, dy = (a - y) / a, dz = (a - z) / a;
    const Complex e2 = dx * dy - dz * dz;
    const Complex e3 = dx * dy * dz;
    return (Real(1) + (e2 / Real(24) - Real(0.1) - Real(3) / 44 * e3) * e2 + e3 / Real(14)) / std::sqrt(a);
}

Complex carlson_rd(Complex x, Complex y, Complex z)
{
    for (Complex v : {x, y, z})
        check_cut(v, "carlson_rd");
    if (z == Complex(0) || (x == Complex(0) && y == Complex(0)))
        throw PoleError("carlson_rd: singular arguments");
    Complex sum = 0;
    Real fac = 1;
    Complex a = (x + y + Real(3) * z) / Real(5);
    for (int it = 0; spread(a, x, y, z) >= kSpread; ++it) {
        if (it == kMaxDuplications)
            throw ConvergenceError("carlson_rd: duplication did not contract");
        const Complex sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const Complex lam = sx * sy + sy * sz + sz * sx;
        sum += fac / (sz * (z + lam));
        fac /= 4;
        x = (x + lam) / Real(4);
        y = (y + lam) / Real(4);
        z = (z + lam) / Real(4);
        a = (x + y + Real(3) * z) / Real(5);
    }
    const Complex dx = (a - x) / a, dy = (a - y) / a, dz = (a - z) / a;
    const Complex ea = dx * dy, eb = dz * dz;
    const Complex ec = ea - eb, ed = ea - Real(6) * eb;
    const Complex ee = ed + ec + ec;
    const Complex series = Real(1) +
        ed * (-Real(3) / 14 + Real(9) / 88 * ed - Real(9) / 52 * dz * ee) +
        dz * (ee / Real(6) + dz * (-Real(9) / 22 * ec + Real(3) / 26 * dz * ea));
    return Real(3) * sum + fac * series / (a * std::sqrt(a));
}

bool crosses_cut(const EllipticArgs& args)
{
    constexpr int samples = 512;
    Complex prev = 1;
    for (int i = 1; i <= samples; ++i) {
        const Complex s = std::sin(args.phi * (Real(i) / samples));
        const Complex v = Real(1) - args.m * s * s;
        if (v.imag() == 0 && v.real() < 0)
            return true;
        if ((prev.imag() < 0) != (v.imag() < 0) && prev.imag() != 0 && v.imag() != 0) {
            // Imaginary part changes sign; interpolate the real part at the crossing.
            const Real t = prev.imag() / (prev.imag() - v.imag());
            if (prev.real() + t * (v.real() - prev.real()) < 0)
                return true;
        }
        prev = v;
    }
    return false;
}

namespace {

constexpr Real pi = std::numbers::pi_v<Real>;

struct Reduced {
    Complex phi;
    Real periods;
};

// F and E are quasi-periodic in Re phi with period pi.
Reduced reduce(Complex phi)
{
    const Real k = std::round(phi.real() / pi);
    return {phi - k * pi, k};
}

Complex complete_e(Complex m)
{
    const Complex r = Real(1) - m;
    return carlson_rf(0, r, 1) - m / Real(3) * carlson_rd(0, r, 1);
}

} // namespace

EvalResult elliptic_f(const EllipticArgs& args)
{
    EvalResult out;
    out.branch_flag = crosses_cut(args);
    if (args.phi == Complex(0))
        return out;
    const Reduced r = reduce(args.phi);
    Complex value = 0;
    if (r.phi != Complex(0)) {
        const Complex s = std::sin(r.phi), c = std::cos(r.phi);
        value = s * carlson_rf(c * c, Real(1) - args.m * s * s, 1);
    }
    if (r.periods != 0)
        value += Real(2) * r.periods * carlson_rf(0, Real(1) - args.m, 1);
    out.value = value;
    out.err_estimate = 16 * kEps * std::max<Real>(1, std::abs(value));
    return out;
}

EvalResult elliptic_e(const EllipticArgs& args)
{
    EvalResult out;
    out.branch_flag = crosses_cut(args);
    if (args.phi == Complex(0))
        return out;
    const Reduced r = reduce(args.phi);
    Complex value = 0;
    if (r.phi != Complex(0)) {
        const Complex s = std::sin(r.phi), c = std::cos(r.phi);
        const Complex x = c * c, y = Real(1) - args.m * s * s;
        value = s * carlson_rf(x, y, 1) - args.m / Real(3) * s * s * s * carlson_rd(x, y, 1);
    }
    if (r.periods != 0)
        value += Real(2) * r.periods * complete_e(args.m);
    out.value = value;
    out.err_estimate = 16 * kEps * std::max<Real>(1, std::abs(value));
    return out;
}

Real agm(Real a, Real b)
{
    if (!(a > 0) || !(b > 0))
        throw DomainError("agm: arguments must be positive");
    for (int i = 0; i < 100; ++i) {
        const Real an = (a + b) / 2;
        const Real bn = std::sqrt(a * b);
        if (an == a && bn == b)
            break;
        a = an;
        b = bn;
        if (std::abs(a - b) <= kEps * a)
            break;
    }
    return (a + b) / 2;
}

EvalResult elliptic_k(Complex m)
{
    if (m == Complex(1))
        throw PoleError("elliptic_k: pole at m = 1");
    EvalResult out;
    out.value = carlson_rf(0, Real(1) - m, 1);
    out.err_estimate = 16 * kEps * std::abs(out.value);
    if (m.imag() == 0 && m.real() < 1) {
        const Real via_agm = pi / (2 * agm(1, std::sqrt(1 - m.real())));
        out.err_estimate = std::max(out.err_estimate, std::abs(out.value - via_agm));
    }
    return out;
}

} // namespace rrq
