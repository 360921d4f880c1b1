#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "eflab/errors.hpp"
#include "eflab/fourier_pair.hpp"
#include "eflab/primes.hpp"
#include "eflab/quadrature.hpp"
#include "eflab/selberg.hpp"
#include "eflab/zeros.hpp"

namespace eflab {

// Parameters of one localized explicit-formula evaluation at center t and
// scale L. quad_halfwidth/quad_points of 0 mean automatic selection.
struct EFParams {
    double t = 0.0;
    double L = 1.0;
    double zero_height = 200.0;
    double quad_halfwidth = 0.0;
    int quad_points = 0;

    double prime_cutoff(const FourierPair& pair) const {
        return std::exp(pair.support_halfwidth * L);
    }
};

struct EFBudget {
    double zero_tail = 0.0;
    double arch_tail = 0.0;
    double arch_quad = 0.0;
    double prime_tail = 0.0;
    double pair_trunc = 0.0;
    double total() const { return zero_tail + arch_tail + arch_quad + prime_tail + pair_trunc; }
};

struct ZeroSumResult {
    Complex value = 0.0;
    double tail_bound = 0.0;
};

struct ArchResult {
    Complex value = 0.0;
    double tail_bound = 0.0;
    double quad_error = 0.0;
};

// Pole contribution m_F (h_t(-i/2) + h_t(i/2)) of the shifted test function
// h_t(r) = h(L(r - t)); the two evaluations are a conjugate pair, so the sum
// is real for real t.
inline Complex pole_term(const SelbergDatum& F, const FourierPair& pair, const EFParams& p) {
    if (F.pole_order == 0) return 0.0;
    Complex i(0.0, 1.0);
    Complex a = h_eval(pair, p.L * (-0.5 * i - p.t));
    Complex b = h_eval(pair, p.L * (0.5 * i - p.t));
    return static_cast<double>(F.pole_order) * (a + b);
}

namespace detail {

// 2 log Q + Gamma'/Gamma(1/2+ir) + conjugate reflection, which collapses to
// 2 log Q + 2 Re sum_j lambda_j psi(lambda_j (1/2 + ir) + mu_j): real for any
// datum in the class.
inline double arch_bracket(const SelbergDatum& F, double r) {
    double v = 2.0 * std::log(F.Q);
    Complex s(0.5, r);
    for (const auto& g : F.gamma_factors) v += 2.0 * g.lambda * digamma(g.lambda * s + g.mu).real();
    return v;
}

struct ArchWindow {
    double halfwidth;
    int panels;
};

inline ArchWindow arch_window(const FourierPair& pair, const EFParams& p, double bracket_scale,
                              double log_growth) {
    double R = p.quad_halfwidth;
    if (R <= 0.0) {
        // widen until the envelope tail is negligible; capped for pairs whose
        // envelope only decays like y^-2, where the budget carries the rest
        const double R_cap = std::max(64.0, 6000.0 / p.L);
        R = std::max(4.0, 16.0 / p.L);
        const double target = 1e-6 * std::max(1.0, bracket_scale);
        while (R < R_cap) {
            double tail = envelope_tail_integral(pair, p.L * R, bracket_scale, log_growth) /
                          (kPi * p.L);
            if (tail <= target) break;
            R = std::min(R_cap, R * 1.6);
        }
    }
    double xmax = *std::max_element(pair.widths.begin(), pair.widths.end());
    double width = std::min(2.0 * kPi / (6.0 * p.L * xmax), R / 8.0);
    int panels = p.quad_points > 0 ? p.quad_points
                                   : static_cast<int>(std::ceil(2.0 * R / width));
    if (panels < 8) panels = 8;
    if (panels > 100000) panels = 100000;
    return {R, panels};
}

} // namespace detail

// Archimedean term: (1/2pi) int h(L(r-t)) [2 log Q + Gamma'/Gamma + refl] dr,
// integrated over |r - t| <= quad_halfwidth with the window tail bounded by
// the pair's envelope against the digamma growth.
inline ArchResult arch_term_full(const SelbergDatum& F, const FourierPair& pair, const EFParams& p) {
    const double d = F.degree();
    const double bracket_scale =
        2.0 * std::abs(std::log(F.Q)) + d * (std::log(2.0 + std::abs(p.t)) + 1.0) +
        d * std::max(0.0, std::log(1.0 / p.L));
    auto win = detail::arch_window(pair, p, bracket_scale, d);

    double err = 0.0;
    double integral = integrate_with_refinement(
        [&](double r) { return h_eval_real(pair, p.L * (r - p.t)) * detail::arch_bracket(F, r); },
        p.t - win.halfwidth, p.t + win.halfwidth, std::max(4, win.panels / 2), &err);

    ArchResult res;
    res.value = integral / (2.0 * detail::kPi);
    res.tail_bound = envelope_tail_integral(pair, p.L * win.halfwidth, bracket_scale, d) /
                     (detail::kPi * p.L);
    res.quad_error = std::max(err / (2.0 * detail::kPi), 1e-13 * (1.0 + std::abs(res.value)));
    return res;
}

inline Complex arch_term(const SelbergDatum& F, const FourierPair& pair, const EFParams& p) {
    return arch_term_full(F, pair, p).value;
}

// Archimedean difference H_F - H_G under one shared window. The integrand is
// h * (bracket_F - bracket_G), so the slowly decaying single-datum tails
// cancel pointwise; the remaining tail scales with the bracket difference
// (constant for equal-degree pairs) instead of d log t.
inline ArchResult arch_term_delta(const SelbergDatum& F, const SelbergDatum& G, const FourierPair& pair,
                                  const EFParams& p) {
    const double ddiff = std::abs(F.degree() - G.degree());
    const double bracket_scale = 2.0 * std::abs(std::log(F.Q / G.Q)) +
                                 (F.degree() + G.degree()) * 0.5 +
                                 ddiff * (std::log(2.0 + std::abs(p.t)) + 1.0);
    auto win = detail::arch_window(pair, p, bracket_scale, std::max(ddiff, 0.25));

    double err = 0.0;
    double integral = integrate_with_refinement(
        [&](double r) {
            return h_eval_real(pair, p.L * (r - p.t)) *
                   (detail::arch_bracket(F, r) - detail::arch_bracket(G, r));
        },
        p.t - win.halfwidth, p.t + win.halfwidth, std::max(4, win.panels / 2), &err);

    ArchResult res;
    res.value = integral / (2.0 * detail::kPi);
    res.tail_bound = envelope_tail_integral(pair, p.L * win.halfwidth, bracket_scale,
                                            std::max(ddiff, 0.25)) /
                     (detail::kPi * p.L);
    res.quad_error = std::max(err / (2.0 * detail::kPi), 1e-13 * (1.0 + std::abs(res.value)));
    return res;
}

// Prime-power term D_F(t, L): an exact finite sum, since g vanishes beyond
// exp(support * L).
inline Complex prime_term(const SelbergDatum& F, const FourierPair& pair, const EFParams& p) {
    const double cutoff = p.prime_cutoff(pair);
    if (!(cutoff <= 5e7))
        throw std::invalid_argument("prime_term: cutoff exp(support*L) too large for direct summation");
    Complex sum = 0.0;
    const auto primes = primes_up_to(static_cast<std::uint64_t>(cutoff));
    for (std::uint64_t q : primes) {
        for (std::uint64_t n = q; n <= static_cast<std::uint64_t>(cutoff); n *= q) {
            const double ln = std::log(static_cast<double>(n));
            const double gval = g_eval(pair, ln / p.L);
            if (gval != 0.0) {
                Complex b = F.b_lambda(n);
                const double rm = std::exp(-0.5 * ln) * gval; // g(log n / L) / sqrt(n)
                const double ph = -p.t * ln;
                Complex osc(std::cos(ph), std::sin(ph)); // n^{-it}
                sum += b * osc * rm + std::conj(b) * std::conj(osc) * rm;
            }
        }
    }
    return sum / p.L;
}

// Zero-side sum over +-gamma (conjugate completion) up to zero_height, with a
// density-integrated tail bound for the zeros beyond it.
inline ZeroSumResult zero_sum(const SelbergDatum& F, const ZeroList& zeros, const FourierPair& pair,
                              const EFParams& p) {
    if (!zeros.complete)
        throw IncompleteZeroListError("zero_sum: zero list is not certified complete");
    if (zeros.t_max < p.zero_height)
        throw IncompleteZeroListError("zero_sum: zero list does not reach zero_height");
    if (!(p.zero_height > std::abs(p.t)))
        throw std::invalid_argument("zero_sum: zero_height must exceed |t|");

    double v = 0.0;
    std::size_t used = 0;
    for (double g : zeros.ordinates) {
        if (g > p.zero_height) break;
        v += h_eval_real(pair, p.L * (g - p.t)) + h_eval_real(pair, p.L * (g + p.t));
        ++used;
    }

    const double d = F.degree();
    const double y0 = p.L * (p.zero_height - std::abs(p.t));
    const double a = (d / detail::kPi) * (std::log(2.0 + std::abs(p.t)) + std::max(0.0, std::log(1.0 / p.L)));
    const double b = d / detail::kPi;
    // envelope * density integral, doubled once for the mirrored zeros and
    // once more as the safety factor on the fitted density
    double tail = 4.0 / p.L * envelope_tail_integral(pair, y0, a + b, b);
    tail += p.L * 1e-9 * static_cast<double>(used); // ordinate refinement slop

    return {Complex(v, 0.0), tail};
}

// The assembled identity report: residual = |Z - pole - arch + prime| checked
// against the accumulated truncation/quadrature budget.
struct EFReport {
    Complex zero_sum_value = 0.0;
    Complex pole_term_value = 0.0;
    Complex arch_term_value = 0.0;
    Complex prime_term_value = 0.0;
    double residual = 0.0;
    double budget = 0.0;
    EFBudget parts;
    bool pass = false;
    EFParams params;
    double prime_cutoff_value = 0.0;
    std::string datum;
};

inline EFReport verify_formula(const SelbergDatum& F, const ZeroList& zeros, const FourierPair& pair,
                               const EFParams& p) {
    EFReport rep;
    rep.params = p;
    rep.prime_cutoff_value = p.prime_cutoff(pair);
    rep.datum = F.name;
    auto zs = zero_sum(F, zeros, pair, p);
    auto ar = arch_term_full(F, pair, p);
    rep.zero_sum_value = zs.value;
    rep.pole_term_value = pole_term(F, pair, p);
    rep.arch_term_value = ar.value;
    rep.prime_term_value = prime_term(F, pair, p);
    rep.residual = std::abs(rep.zero_sum_value - rep.pole_term_value - rep.arch_term_value +
                            rep.prime_term_value);
    rep.parts.zero_tail = zs.tail_bound;
    rep.parts.arch_tail = ar.tail_bound;
    rep.parts.arch_quad = ar.quad_error;
    rep.parts.prime_tail = 0.0; // the prime sum is exact (compact support)
    rep.parts.pair_trunc = 0.0; // identity is evaluated with the pair as built
    rep.budget = rep.parts.total();
    rep.pass = rep.residual <= rep.budget + 1e-4;
    return rep;
}

// Stirling-regime approximation of the archimedean term: g(0) d log(t) / L.
inline double stirling_H(const SelbergDatum& F, const FourierPair& pair, double t, double L) {
    if (!(t > 1.0)) throw std::invalid_argument("stirling_H: t must exceed 1");
    return g_eval(pair, 0.0) * F.degree() * std::log(t) / L;
}

} // namespace eflab
