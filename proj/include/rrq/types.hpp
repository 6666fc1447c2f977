#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#ifndef RRQ_REAL
#define RRQ_REAL double
#endif

namespace rrq {

using Real = RRQ_REAL;
using Complex = std::complex<Real>;

inline constexpr Real kEps = std::numeric_limits<Real>::epsilon();
inline constexpr Real kInf = std::numeric_limits<Real>::infinity();

// Human-readable label for the working precision.
const char* precision_name();

struct EvalResult {
    Complex value{};
    Real err_estimate = 0;
    int terms_used = 0;
    bool converged = true;
    // Set by elliptic routines when 1 - m sin^2 crosses the cut along [0, phi].
    bool branch_flag = false;
};

struct Truncation {
    int max_terms = 20000;
    Real tail_tol = 1e-16;

    void validate() const;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class BranchError : public DomainError {
public:
    using DomainError::DomainError;
};

class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

class NoRouteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Returns r.value, or throws ConvergenceError naming `what` when r is unconverged.
Complex checked(const EvalResult& r, const std::string& what);

} // namespace rrq
