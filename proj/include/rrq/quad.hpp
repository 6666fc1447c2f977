#pragma once

#include <functional>

#include "rrq/types.hpp"

namespace rrq {

enum class Rule { tanh_sinh, adaptive_gauss_kronrod };

struct QuadratureSpec {
    Rule rule = Rule::tanh_sinh;
    Real abs_tol = 1e-12;
    Real rel_tol = 1e-11;
    int max_levels = 12;

    void validate() const;
};

// A node inside [a, b] together with its distances to both endpoints. The
// distances are computed directly from the transform, so they stay accurate
// where a + to_lo or b - to_hi would round to the endpoint.
struct Abscissa {
    Real x;
    Real to_lo;
    Real to_hi;
};

using RealIntegrand = std::function<Complex(Real)>;
using NodeIntegrand = std::function<Complex(const Abscissa&)>;
using ComplexIntegrand = std::function<Complex(Complex)>;

struct PathSegment {
    Complex z0;
    Complex z1;

    Complex at(Real t) const { return z0 + t * (z1 - z0); }
};

// b < a is allowed and yields the negated integral.
EvalResult integrate_finite(const RealIntegrand& f, Real a, Real b, const QuadratureSpec& spec = {});
EvalResult integrate_nodes(const NodeIntegrand& f, Real a, Real b, const QuadratureSpec& spec = {});

// Integral over [a, inf) through x = a + t/(1-t).
EvalResult integrate_semi_infinite(const RealIntegrand& f, Real a, const QuadratureSpec& spec = {});

EvalResult integrate_complex_segment(const ComplexIntegrand& f, const PathSegment& path,
                                     const QuadratureSpec& spec = {});

struct Derivative {
    Complex value;
    Real err_estimate;
};

// Fourth-order central difference at steps h and h/2 combined by Richardson.
Derivative differentiate(const std::function<Complex(Real)>& f, Real x, Real h);
Derivative differentiate_complex(const ComplexIntegrand& f, Complex z, Real h);

} // namespace rrq
