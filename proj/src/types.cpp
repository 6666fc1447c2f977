#include "rrq/types.hpp"

#include <type_traits>

namespace rrq {

const char* precision_name()
{
    if constexpr (std::is_same_v<Real, double>)
        return "binary64";
    else if constexpr (std::is_same_v<Real, long double>)
        return "x87-extended";
    else
        return "custom";
}

void Truncation::validate() const
{
    if (max_terms < 1 || !(tail_tol > 0))
        throw DomainError("truncation: max_terms must be >= 1 and tail_tol > 0");
}

Complex checked(const EvalResult& r, const std::string& what)
{
    if (!r.converged)
        throw ConvergenceError(what + " did not converge");
    return r.value;
}

} // namespace rrq
