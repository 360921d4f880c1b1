#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

#include "eflab/errors.hpp"
#include "eflab/gamma.hpp"

namespace eflab {

// Accuracy controls shared by the series/quadrature evaluators.
struct EvalOptions {
    double target_abs_error = 1e-10;
    int euler_maclaurin_terms = 12; // correction terms J, clamped to [2, 30]
    double shift_threshold = 10.0;  // minimum scale before asymptotics are trusted

    int clamped_terms() const { return std::clamp(euler_maclaurin_terms, 2, 30); }
};

namespace detail {

// B_{2j} for j = 1..15.
constexpr double kBernoulli2n[15] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// r^{-s} for real r > 0 (cheaper than std::pow on complex).
inline Complex real_pow_neg(double r, Complex s) {
    double lr = std::log(r);
    double mag = std::exp(-s.real() * lr);
    double ph = -s.imag() * lr;
    return Complex(mag * std::cos(ph), mag * std::sin(ph));
}

// Euler-Maclaurin core. With subtract_pole the term (a+N)^{1-s}/(s-1) is
// replaced by [(a+N)^{1-s} - 1]/(s-1), i.e. the evaluation of
// zeta(s,a) - 1/(s-1), which is regular at s = 1 (used to evaluate Dirichlet
// L-functions near and at s = 1 where the character sum cancels the poles).
inline Complex hurwitz_core(Complex s, double a, const EvalOptions& opts, bool subtract_pole) {
    const int J = opts.clamped_terms();
    double ssize = std::abs(s);
    std::int64_t N = static_cast<std::int64_t>(
        std::ceil(std::max({opts.shift_threshold + 2.0 * J, 0.6 * std::abs(s.imag()) + 2.0 * J, 16.0})));

    for (int attempt = 0; attempt < 4; ++attempt) {
        const double base = a + static_cast<double>(N);
        Complex sum = 0.0;
        for (std::int64_t k = N - 1; k >= 0; --k) // ascending magnitude
            sum += real_pow_neg(a + static_cast<double>(k), s);

        Complex tail;
        if (subtract_pole) {
            // [(base)^{1-s} - 1]/(s-1) = -expm1((1-s) log base)/(1-s), stable at s=1
            Complex e = (1.0 - s) * std::log(base);
            if (std::abs(e) < 1e-12) {
                tail = -std::log(base) * (1.0 + e / 2.0);
            } else {
                tail = -(std::exp(e) - 1.0) / (1.0 - s);
            }
        } else {
            tail = real_pow_neg(base, s - 1.0) / (s - 1.0);
        }

        Complex bs = real_pow_neg(base, s); // base^{-s}
        tail += 0.5 * bs;

        // Correction terms B_{2j}/(2j)! * (s)_{2j-1} * base^{-s-2j+1}
        Complex poch = s;              // (s)_1
        Complex basepow = bs * base;   // base^{-s+1}
        const double b2 = base * base;
        double lastmag = 0.0;
        for (int j = 1; j <= J; ++j) {
            basepow /= b2; // base^{-s-2j+1}
            Complex term = (kBernoulli2n[j - 1] / factorial(2 * j)) * poch * basepow;
            tail += term;
            lastmag = std::abs(term);
            poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
            if (lastmag < 1e-3 * opts.target_abs_error && j >= 4) break;
        }

        // The remainder is comparable to the first omitted term; the |s+2J+1|
        // factor covers the standard bound's growth along vertical lines.
        double rem = lastmag * (1.0 + std::abs(s + static_cast<double>(2 * J + 1)) /
                                          std::max(1.0, s.real() + 2.0 * J + 1.0));
        if (rem <= opts.target_abs_error || N > (1 << 24))
            return sum + tail;
        N *= 2;
        (void)ssize;
    }
    throw QuadratureError("hurwitz_zeta: Euler-Maclaurin failed to converge");
}

} // namespace detail

// Hurwitz zeta(s, a) for a in (0, 1], s != 1, by Euler-Maclaurin summation.
inline Complex hurwitz_zeta(Complex s, double a, const EvalOptions& opts = {}) {
    if (!(a > 0.0 && a <= 1.0))
        throw std::invalid_argument("hurwitz_zeta: a must lie in (0, 1]");
    if (std::abs(s - 1.0) <= detail::kPoleGuard)
        throw PoleError("hurwitz_zeta: pole at s = 1");
    return detail::hurwitz_core(s, a, opts, false);
}

// zeta(s, a) - 1/(s-1): entire in s, usable at s = 1.
inline Complex hurwitz_zeta_minus_pole(Complex s, double a, const EvalOptions& opts = {}) {
    if (!(a > 0.0 && a <= 1.0))
        throw std::invalid_argument("hurwitz_zeta_minus_pole: a must lie in (0, 1]");
    return detail::hurwitz_core(s, a, opts, true);
}

} // namespace eflab
