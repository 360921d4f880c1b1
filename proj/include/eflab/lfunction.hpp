#pragma once

#include <cmath>
#include <complex>

#include "eflab/errors.hpp"
#include "eflab/gamma.hpp"
#include "eflab/hurwitz.hpp"
#include "eflab/selberg.hpp"

namespace eflab {

// Analytic value F(s) of a built-in datum. zeta via Euler-Maclaurin, Dirichlet
// L via q^{-s} sum of Hurwitz zetas (with the pole subtracted per term near
// s = 1, where the character sum cancels it), products by multiplication.
inline Complex l_value(const SelbergDatum& F, Complex s, const EvalOptions& opts = {}) {
    switch (F.kind) {
        case SelbergDatum::Kind::zeta:
            return hurwitz_zeta(s, 1.0, opts); // throws PoleError at s = 1
        case SelbergDatum::Kind::dirichlet: {
            const auto& chi = *F.chi;
            const double q = chi.modulus;
            const bool near_pole = std::abs(s - 1.0) < 0.1;
            Complex sum = 0.0;
            for (std::uint32_t a = 1; a < chi.modulus; ++a) {
                if (std::abs(chi.values[a]) < 0.5) continue;
                Complex z = near_pole ? hurwitz_zeta_minus_pole(s, a / q, opts)
                                      : hurwitz_zeta(s, a / q, opts);
                sum += chi.values[a] * z;
            }
            // q^{-s}
            return sum * std::exp(-s * std::log(q));
        }
        case SelbergDatum::Kind::product: {
            Complex v = 1.0;
            for (const auto& f : F.factors) v *= l_value(*f, s, opts);
            return v;
        }
        case SelbergDatum::Kind::coefficients_only:
        default:
            throw std::invalid_argument(F.name + ": datum has no evaluation recipe");
    }
}

// log of the gamma-and-conductor prefactor: w(s) = s log Q + sum_j
// log Gamma(lambda_j s + mu_j). Analytic on Re s > 0 (all built-in gamma
// arguments stay in the right half-plane there), which makes Im w the
// continuous theta phase used for zero counting.
inline Complex log_prefactor(const SelbergDatum& F, Complex s) {
    Complex w = s * std::log(F.Q);
    for (const auto& g : F.gamma_factors) w += log_gamma(g.lambda * s + g.mu);
    return w;
}

// Completed function Phi(s) = Q^s Gamma_F(s) F(s), accumulated in log space
// so the gamma decay cannot underflow intermediate factors.
inline Complex completed_phi(const SelbergDatum& F, Complex s, const EvalOptions& opts = {}) {
    if (F.pole_order > 0 && (std::abs(s - 1.0) <= detail::kPoleGuard || std::abs(s) <= detail::kPoleGuard))
        throw PoleError(F.name + ": completed function has a pole at s = 0, 1");
    return std::exp(log_prefactor(F, s)) * l_value(F, s, opts);
}

// Relative residual of the functional equation Phi(s) = omega * conj(Phi(1 - conj s)).
inline double functional_equation_residual(const SelbergDatum& F, Complex s, const EvalOptions& opts = {}) {
    Complex lhs = completed_phi(F, s, opts);
    Complex rhs = F.omega * std::conj(completed_phi(F, 1.0 - std::conj(s), opts));
    return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
}

} // namespace eflab
