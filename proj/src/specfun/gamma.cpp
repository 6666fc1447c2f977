#include <array>
#include <cmath>
#include <numbers>

#include "rrq/specfun.hpp"

namespace rrq {

namespace {

constexpr Real pi = std::numbers::pi_v<Real>;

// Lanczos g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(Complex z)
{
    return z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real());
}

// log sin(pi z) for Im z >= 0, written so that large Im z does not overflow.
Complex log_sin_pi(Complex z)
{
    const Complex i(0, 1);
    const Complex e = std::exp(Real(2) * pi * i * z);
    return -i * pi * z + std::log(Real(1) - e) + std::log(Real(0.5)) + i * (pi / 2);
}

Complex lanczos(Complex z)
{
    z -= Real(1);
    Complex x = Real(kLanczos[0]);
    for (int k = 1; k < 9; ++k)
        x += Real(kLanczos[k]) / (z + Real(k));
    const Complex t = z + Real(7.5);
    return Real(0.5) * std::log(2 * pi) + (z + Real(0.5)) * std::log(t) - t + std::log(x);
}

} // namespace

Complex lngamma(Complex z)
{
    if (is_pole(z))
        throw PoleError("lngamma: pole at a nonpositive integer");
    if (z.imag() < 0)
        return std::conj(lngamma(std::conj(z)));
    if (z.real() < Real(0.5))
        return std::log(pi) - log_sin_pi(z) - lngamma(Real(1) - z);
    return lanczos(z);
}

Complex rgamma(Complex z)
{
    if (is_pole(z))
        return 0;
    return std::exp(-lngamma(z));
}

Complex digamma(Complex z)
{
    if (is_pole(z))
        throw PoleError("digamma: pole at a nonpositive integer");
    if (z.real() < Real(0.5))
        return digamma(Real(1) - z) - pi / std::tan(pi * z);
    Complex shift = 0;
    while (std::abs(z) < 12) {
        shift -= Real(1) / z;
        z += Real(1);
    }
    const Complex iz2 = Real(1) / (z * z);
    // Asymptotic tail with Bernoulli numbers B2..B12.
    const Complex tail =
        iz2 * (Real(1) / 12 -
               iz2 * (Real(1) / 120 -
                      iz2 * (Real(1) / 252 - iz2 * (Real(1) / 240 - iz2 * (Real(1) / 132 - iz2 * (Real(691) / 32760))))));
    return shift + std::log(z) - Real(0.5) / z - tail;
}

Complex beta_fn(Complex a, Complex b)
{
    if (is_pole(a) || is_pole(b) || is_pole(a + b))
        throw PoleError("beta_fn: argument at a pole of Gamma");
    return std::exp(lngamma(a) + lngamma(b) - lngamma(a + b));
}

} // namespace rrq
