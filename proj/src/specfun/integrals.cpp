#include <cmath>
#include <sstream>

#include "rrq/qseries.hpp"
#include "rrq/specfun.hpp"

namespace rrq {

EvalResult triple_f(const TripleFParams& p, const QuadratureSpec& spec)
{
    const Complex shifts[3] = {p.A, p.B, p.C};
    const Complex powers[3] = {p.lambda, p.mu, p.nu};
    if (!((p.lambda + p.mu + p.nu).real() > 1))
        throw DivergenceError("triple_f: Re(lambda + mu + nu) must exceed 1");
    for (int i = 0; i < 3; ++i) {
        if (powers[i] == Complex(0))
            continue;
        if (shifts[i].imag() == 0 && shifts[i].real() < 0)
            throw DomainError("triple_f: shift on the negative real axis puts a singularity inside [0, inf)");
        if (shifts[i] == Complex(0) && !(powers[i].real() < 1))
            throw DivergenceError("triple_f: non-integrable singularity at x = 0");
    }
    // x = t/(1-t) on (0,1); the whole integrand is assembled in log form so that
    // neither the power tail nor the jacobian overflows.
    auto integrand = [&](const Abscissa& n) -> Complex {
        const Real x = n.to_lo / n.to_hi;
        Complex log_sum = -Real(2) * std::log(n.to_hi);
        for (int i = 0; i < 3; ++i) {
            if (powers[i] == Complex(0))
                continue;
            const Complex base = shifts[i] == Complex(0) ? Complex(x) : x + shifts[i];
            log_sum -= powers[i] * std::log(base);
        }
        return std::exp(log_sum);
    };
    return integrate_nodes(integrand, 0, 1, spec);
}

EvalResult gr_3197(Complex s, Complex mu, Complex nu, Complex A, Complex B, const Truncation& t)
{
    if (!(s.real() > 0 && s.real() < (mu + nu).real()))
        throw DomainError("gr_3197: needs 0 < Re s < Re(mu + nu)");
    if (A == Complex(0) || B == Complex(0))
        throw DomainError("gr_3197: shifts must be nonzero");
    const Complex prefactor = std::exp((s - nu) * std::log(B) - mu * std::log(A)) * beta_fn(s, mu + nu - s);
    EvalResult h = gauss_2f1(HyperParams(mu, s, mu + nu, Real(1) - B / A), t);
    h.value *= prefactor;
    h.err_estimate = h.err_estimate * std::abs(prefactor) + 8 * kEps * std::abs(h.value);
    return h;
}

EvalResult eta4_antiderivative_series(Real R, const Truncation& t)
{
    t.validate();
    if (!(R > 0 && R < rr_at_one())) {
        std::ostringstream os;
        os << "eta4_antiderivative_series: R = " << R << " outside (0, (sqrt5-1)/2)";
        throw DomainError(os.str());
    }
    const Real s5 = std::sqrt(Real(5));
    const Real alpha = (11 + 5 * s5) / 2;
    const Real beta = (11 - 5 * s5) / 2;
    const Real rho = beta / alpha;
    const Real Y = alpha * std::pow(R, 5);
    const Real sixth = Real(1) / 6;

    Real coeff = 1; // (1/6)_n^2 / ((7/6)_n n!) Y^n
    Real sum = 0, comp = 0, magnitude = 0;
    EvalResult out;
    out.converged = false;
    int n = 0;
    for (; n < t.max_terms; ++n) {
        // Terminating 2F1(1/6, -n; 5/6 - n; rho).
        Real inner = 1, term_j = 1;
        for (int j = 0; j < n; ++j) {
            term_j *= (sixth + j) * (j - n) / ((Real(5) / 6 - n + j) * (j + 1)) * rho;
            inner += term_j;
        }
        const Real term = coeff * inner;
        const Real tsum = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - tsum) + term : (term - tsum) + sum;
        sum = tsum;
        magnitude += std::abs(term);
        const Real ratio = (sixth + n) * (sixth + n) / ((Real(7) / 6 + n) * (n + 1)) * Y;
        if (ratio < 1 && n > 2) {
            const Real tail = std::abs(term) * std::max(ratio, Y) / (1 - std::max(ratio, Y)) * 1.01;
            if (tail <= t.tail_tol * std::abs(sum)) {
                out.converged = true;
                break;
            }
        }
        coeff *= ratio;
    }
    const Real scale = std::pow(R, Real(5) / 6);
    out.value = scale * (sum + comp);
    out.err_estimate = scale * (4 * kEps * magnitude + t.tail_tol * std::abs(sum));
    out.terms_used = n + 1;
    return out;
}

} // namespace rrq
