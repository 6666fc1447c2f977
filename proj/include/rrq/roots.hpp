#pragma once

#include <optional>
#include <utility>

#include "rrq/types.hpp"

namespace rrq {

enum class TargetFn { u, y };

const char* to_string(TargetFn fn);

struct RootSpec {
    TargetFn target_fn = TargetFn::u;
    Complex target_value{};
    std::optional<std::pair<Real, Real>> bracket{};
    std::optional<Complex> seed{};
    Real tol = 1e-12;
    int max_iter = 100;
};

struct RealRoot {
    Real q;
    Real residual;
    int iterations;
};

struct ComplexRoot {
    Complex q;
    Real residual;
    int iterations;
};

class NoSignChangeError : public DomainError {
public:
    using DomainError::DomainError;
};

class ToleranceError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

// Bracketing solve on (0,1). The bracket defaults to [1e-6, 0.999].
RealRoot solve_real(const RootSpec& spec);

// Newton from spec.seed. For u the iteration runs on w = R(q)^5, where the
// target values -11 +- 2i (double roots of u - t) stay simple.
ComplexRoot solve_complex(const RootSpec& spec);

// Sign changes of fn - target over `points` equally spaced samples of [lo, hi].
int count_sign_changes(TargetFn fn, Real target, Real lo, Real hi, int points = 64);

} // namespace rrq
