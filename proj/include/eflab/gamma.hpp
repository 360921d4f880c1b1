#pragma once

#include <cmath>
#include <complex>

#include "eflab/errors.hpp"

namespace eflab {

using Complex = std::complex<double>;

namespace detail {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836; // log(2*pi)
constexpr double kPoleGuard = 1e-6;               // pole proximity guard radius

// B_{2n} / (2n (2n-1)), n = 1..9: coefficients of the Stirling series for
// log Gamma. Nine terms at |z| >= 12 leave a remainder below 1e-16.
constexpr double kStirlingLogGamma[9] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

// B_{2n} / (2n), n = 1..9: Stirling series for digamma.
constexpr double kStirlingDigamma[9] = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
};

inline bool near_nonpositive_integer(Complex s, double guard = kPoleGuard) {
    if (s.real() > 0.5) return false;
    double rn = std::round(s.real());
    return rn <= 0.0 && std::abs(s.real() - rn) <= guard && std::abs(s.imag()) <= guard;
}

// Asymptotic log Gamma; caller guarantees |z| large enough and Re z > 0.
inline Complex stirling_log_gamma(Complex z) {
    Complex lz = std::log(z);
    Complex acc = (z - 0.5) * lz - z + 0.5 * kLog2Pi;
    Complex zinv2 = 1.0 / (z * z);
    Complex term = 1.0 / z;
    for (double c : kStirlingLogGamma) {
        acc += c * term;
        term *= zinv2;
    }
    return acc;
}

inline Complex stirling_digamma(Complex z) {
    Complex acc = std::log(z) - 0.5 / z;
    Complex zinv2 = 1.0 / (z * z);
    Complex term = zinv2;
    for (double c : kStirlingDigamma) {
        acc -= c * term;
        term *= zinv2;
    }
    return acc;
}

// log sin(pi z), branch continuous on each horizontal half-plane (never used
// across Im z = 0 except on the real segment itself). Written to avoid
// overflow of sin for large |Im z|.
inline Complex log_sin_pi(Complex z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| <= 1 here
    Complex i(0.0, 1.0);
    return i * kPi * 0.5 - std::log(2.0) - i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z));
}

} // namespace detail

// Principal-branch complex log Gamma. On Re s > 0 this is the analytic
// continuation from the positive real axis (continuous along vertical lines),
// which is what the completed-function phase computations rely on. For
// Re s < 1/2 the reflection formula is used; exp(log_gamma) is then exact but
// the additive branch is only pinned modulo 2 pi i per horizontal line.
inline Complex log_gamma(Complex s) {
    if (detail::near_nonpositive_integer(s))
        throw PoleError("log_gamma: pole at nonpositive integer");
    if (s.real() < 0.5) {
        // log Gamma(s) = log pi - log sin(pi s) - log Gamma(1-s)
        return std::log(detail::kPi) - detail::log_sin_pi(s) - log_gamma(1.0 - s);
    }
    Complex acc = 0.0;
    Complex z = s;
    while (std::abs(z) < 12.0) {
        acc += std::log(z);
        z += 1.0;
    }
    return detail::stirling_log_gamma(z) - acc;
}

// Complex digamma (log-derivative of Gamma).
inline Complex digamma(Complex s) {
    if (detail::near_nonpositive_integer(s))
        throw PoleError("digamma: pole at nonpositive integer");
    if (s.real() < 0.5) {
        // psi(s) = psi(1-s) - pi cot(pi s); cot written via e^{2 i pi z} so it
        // stays bounded for large |Im s|.
        Complex z = s;
        bool flip = z.imag() < 0.0;
        if (flip) z = std::conj(z);
        Complex i(0.0, 1.0);
        Complex u = std::exp(2.0 * i * detail::kPi * z);
        Complex cot = i * (u + 1.0) / (u - 1.0);
        if (flip) cot = std::conj(cot);
        return digamma(1.0 - s) - detail::kPi * cot;
    }
    Complex acc = 0.0;
    Complex z = s;
    while (std::abs(z) < 10.0) {
        acc += 1.0 / z;
        z += 1.0;
    }
    return detail::stirling_digamma(z) - acc;
}

} // namespace eflab
