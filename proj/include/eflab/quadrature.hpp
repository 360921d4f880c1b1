#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace eflab {

namespace detail {

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr double kGL16X[8] = {
    0.09501250983763744019, 0.28160355077925891323, 0.45801677765722738634,
    0.61787624440264374845, 0.75540440835500303390, 0.86563120238783174388,
    0.94457502307323257608, 0.98940093499164993260,
};
constexpr double kGL16W[8] = {
    0.18945061045506849629, 0.18260341504492358887, 0.16915651939500253819,
    0.14959598881657673208, 0.12462897125553387205, 0.09515851168249278481,
    0.06225352393864789286, 0.02715245941175409485,
};

} // namespace detail

// Composite Gauss-Legendre over [a, b] with n equal panels; node order is
// fixed, so the summation is deterministic.
template <typename F>
auto integrate_panels(F&& f, double a, double b, int n) -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    if (n < 1) n = 1;
    const double w = (b - a) / n;
    R total{};
    for (int k = 0; k < n; ++k) {
        const double mid = a + (k + 0.5) * w;
        const double half = 0.5 * w;
        R panel{};
        for (int j = 0; j < 8; ++j) {
            const double dx = half * detail::kGL16X[j];
            panel += detail::kGL16W[j] * (f(mid - dx) + f(mid + dx));
        }
        total += panel * half;
    }
    return total;
}

// Integrates with n and 2n panels; returns the finer value and writes the
// difference (a practical error estimate) to err.
template <typename F>
auto integrate_with_refinement(F&& f, double a, double b, int n, double* err) -> decltype(f(0.0)) {
    auto coarse = integrate_panels(f, a, b, n);
    auto fine = integrate_panels(f, a, b, 2 * n);
    if (err) *err = std::abs(fine - coarse);
    return fine;
}

} // namespace eflab
