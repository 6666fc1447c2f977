#pragma once

#include "rrq/quad.hpp"
#include "rrq/types.hpp"

namespace rrq {

Complex lngamma(Complex z);
Complex digamma(Complex z);
// 1/Gamma(z); zero at the poles of Gamma.
Complex rgamma(Complex z);
Complex beta_fn(Complex a, Complex b);

struct HyperParams {
    Complex a, b, c, z;

    HyperParams(Complex a_, Complex b_, Complex c_, Complex z_);
};

enum class HyperRoute { series, pfaff, one_minus_z, one_minus_z_log, euler_integral };

const char* to_string(HyperRoute r);

// Picks the first applicable route in the order series, Pfaff, 1 - z, Euler integral.
EvalResult gauss_2f1(const HyperParams& p, const Truncation& t = {});
// Forces one route; throws NoRouteError when it does not apply.
EvalResult gauss_2f1_via(const HyperParams& p, HyperRoute route, const Truncation& t = {},
                         const QuadratureSpec& spec = {});
HyperRoute gauss_2f1_route(const HyperParams& p);

struct F1Params {
    Complex a, b1, b2, c, x, y;
};

// Euler integral route.
EvalResult appell_f1(const F1Params& p, const Truncation& t = {}, const QuadratureSpec& spec = {});
// Row-wise double series: sum_m (a)_m (b1)_m / ((c)_m m!) x^m 2F1(a+m, b2; c+m; y).
EvalResult appell_f1_series(const F1Params& p, const Truncation& t = {});

Complex carlson_rf(Complex x, Complex y, Complex z);
Complex carlson_rd(Complex x, Complex y, Complex z);

// Parameter convention: integrand (1 - m sin^2 theta)^{-1/2}.
struct EllipticArgs {
    Complex phi;
    Complex m;
};

// True when 1 - m sin^2(s phi), s in [0, 1], crosses the negative real axis.
bool crosses_cut(const EllipticArgs& args);

EvalResult elliptic_f(const EllipticArgs& args);
EvalResult elliptic_e(const EllipticArgs& args);
EvalResult elliptic_k(Complex m);
Real agm(Real a, Real b);

struct TripleFParams {
    Complex A, B, C;
    Complex lambda, mu, nu;
};

// Integral over [0, inf) of (x+A)^-lambda (x+B)^-mu (x+C)^-nu.
EvalResult triple_f(const TripleFParams& p, const QuadratureSpec& spec = {});

// Closed form of the integral over [0, inf) of x^{s-1} (x+A)^-mu (x+B)^-nu.
EvalResult gr_3197(Complex s, Complex mu, Complex nu, Complex A, Complex B, const Truncation& t = {});

// Antiderivative of eta(i tau)^4 (times pi/3) in powers of R^5:
// R^{5/6} sum_n (1/6)_n^2 / ((7/6)_n n!) alpha^n 2F1(1/6, -n; 5/6 - n; beta/alpha) R^{5n}
// with alpha, beta = (11 +- 5 sqrt5)/2.
EvalResult eta4_antiderivative_series(Real R, const Truncation& t = {});

} // namespace rrq
