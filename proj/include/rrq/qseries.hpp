#pragma once

#include <cmath>

#include "rrq/types.hpp"

namespace rrq {

// A point of the open unit disk. The principal logarithm is carried along so
// that nomes built as exp(-2 pi tau) keep full relative accuracy in 1 - q^n.
class Nome {
public:
    explicit Nome(Complex q);
    explicit Nome(Real q) : Nome(Complex(q)) {}
    static Nome from_log(Complex log_q);

    Complex value() const { return q_; }
    Complex log() const { return log_q_; }
    // A nome built from a finite log is never zero, even when its value underflows.
    bool is_zero() const { return std::isinf(log_q_.real()); }
    bool is_real_unit_interval() const { return log_q_.imag() == 0 && !is_zero(); }

private:
    Nome(Complex q, Complex log_q) : q_(q), log_q_(log_q) {}
    Complex q_;
    Complex log_q_;
};

// q^{q_power} f(-q^{1/5})^{fifth_root} f(-q)^{unit} f(-q^5)^{fifth_power},
// with f(-x) = prod (1 - x^n) and principal-branch fractional powers.
struct EtaQuotient {
    Real fifth_root = 0;
    Real unit = 0;
    Real fifth_power = 0;
    Real q_power = 0;
};

EvalResult eta_quotient(const Nome& q, const EtaQuotient& e, const Truncation& t = {});

EvalResult euler_product_f(const Nome& q, const Truncation& t = {});
EvalResult pentagonal_series_f(const Nome& q, const Truncation& t = {});
EvalResult dedekind_eta(Real tau, const Truncation& t = {});

// R(q) from the degree-one eta quotient and the quadratic in R. Complex nomes
// follow the root continuous with q^{1/5} along the ray from a small anchor.
EvalResult rr_value(const Nome& q, const Truncation& t = {}, Real max_modulus = 0.98);
// Backward recurrence of the continued fraction; error from depth vs depth/2.
EvalResult rr_cf_oracle(const Nome& q, int depth);

EvalResult u_of_q(const Nome& q, const Truncation& t = {});
EvalResult u_of_q_product(const Nome& q, const Truncation& t = {});
EvalResult y_of_q(const Nome& q, const Truncation& t = {});

// d/dq of log R, u and y in closed form.
EvalResult dlogR_dq(const Nome& q, const Truncation& t = {});
EvalResult du_dq(const Nome& q, const Truncation& t = {});
EvalResult dy_dq(const Nome& q, const Truncation& t = {});

// R at q -> 1: (sqrt5 - 1)/2.
Real rr_at_one();

} // namespace rrq
