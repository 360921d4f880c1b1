#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "eflab/errors.hpp"
#include "eflab/explicit_formula.hpp"
#include "eflab/parallel.hpp"

namespace eflab {

// Windowed zero-side difference Z_F(t,L) - Z_G(t,L).
inline Complex window_zero_delta(const SelbergDatum& F, const SelbergDatum& G, const ZeroList& zF,
                                 const ZeroList& zG, const FourierPair& pair, double t, double L) {
    EFParams p;
    p.t = t;
    p.L = L;
    p.zero_height = std::min(zF.t_max, zG.t_max);
    return zero_sum(F, zF, pair, p).value - zero_sum(G, zG, pair, p).value;
}

// Neighborhoods of radius 1/(W log T) around every ordinate of either list in
// [T, 2T], merged; integration elsewhere avoids the spikes of Z_F - Z_G.
struct MaskedRange {
    double T = 0.0;
    double W = 1.0;
    std::vector<std::pair<double, double>> excluded; // merged, clipped to [T, 2T]
    double measure_excluded = 0.0;

    std::vector<std::pair<double, double>> kept() const {
        std::vector<std::pair<double, double>> out;
        double pos = T;
        for (const auto& [a, b] : excluded) {
            if (a > pos) out.emplace_back(pos, a);
            pos = std::max(pos, b);
        }
        if (pos < 2.0 * T) out.emplace_back(pos, 2.0 * T);
        return out;
    }
};

inline MaskedRange build_mask(const SelbergDatum& F, const SelbergDatum& G, const ZeroList& zF,
                              const ZeroList& zG, double T, double W) {
    (void)F;
    (void)G;
    if (!(W >= 1.0)) throw std::invalid_argument("build_mask: W must be >= 1");
    if (zF.t_max < 2.0 * T + 1.0 || zG.t_max < 2.0 * T + 1.0 || !zF.complete || !zG.complete)
        throw MaskError("build_mask: zero lists must cover [T-1, 2T+1] and be complete");

    const double r = 1.0 / (W * std::log(T));
    std::vector<double> ords;
    for (const auto* list : {&zF, &zG})
        for (double g : list->ordinates)
            if (g > T - 1.0 && g < 2.0 * T + 1.0) ords.push_back(g);
    std::sort(ords.begin(), ords.end());

    MaskedRange m;
    m.T = T;
    m.W = W;
    for (double g : ords) {
        double a = std::max(g - r, T);
        double b = std::min(g + r, 2.0 * T);
        if (a >= b) continue;
        if (!m.excluded.empty() && a <= m.excluded.back().second)
            m.excluded.back().second = std::max(m.excluded.back().second, b);
        else
            m.excluded.emplace_back(a, b);
    }
    for (const auto& [a, b] : m.excluded) m.measure_excluded += b - a;
    return m;
}

// Prime-side difference D_F - D_G reconstructed from archimedean data and
// zeros alone, via the subtracted explicit formulae; no coefficient access.
struct InferredDelta {
    Complex value = 0.0;
    double budget = 0.0;
};

inline InferredDelta infer_D_delta_full(const SelbergDatum& F, const SelbergDatum& G, const ZeroList& zF,
                                        const ZeroList& zG, const FourierPair& pair, double t, double L,
                                        double arch_halfwidth = 0.0) {
    if (F.pole_order != G.pole_order)
        throw std::invalid_argument("infer_D_delta_from_zeros: pole orders differ, pole terms do not cancel");
    EFParams p;
    p.t = t;
    p.L = L;
    p.zero_height = std::min(zF.t_max, zG.t_max);
    p.quad_halfwidth = arch_halfwidth;
    auto dH = arch_term_delta(F, G, pair, p);
    auto sF = zero_sum(F, zF, pair, p);
    auto sG = zero_sum(G, zG, pair, p);
    InferredDelta out;
    out.value = dH.value - (sF.value - sG.value);
    out.budget = dH.tail_bound + dH.quad_error + sF.tail_bound + sG.tail_bound;
    return out;
}

inline Complex infer_D_delta_from_zeros(const SelbergDatum& F, const SelbergDatum& G, const ZeroList& zF,
                                        const ZeroList& zG, const FourierPair& pair, double t, double L) {
    return infer_D_delta_full(F, G, zF, zG, pair, t, L).value;
}

// ------------------------------------------------------------------
// Degree test
// ------------------------------------------------------------------

struct DegreeTestReport {
    double mean_scaled_delta = 0.0;
    double threshold = 0.0;
    std::string verdict;
    bool distinct = false;
    std::vector<std::pair<double, double>> rows; // (t, L |H_F - H_G|)
};

// Averages L |H_F - H_G| over a deterministic grid of t in [T, 2T] and reads
// the verdict off the Stirling-regime scale: a degree gap makes the mean grow
// like g(0) |d_F - d_G| log T.
inline DegreeTestReport degree_test(const SelbergDatum& F, const SelbergDatum& G, const FourierPair& pair,
                                    double T, double L, int samples, double threshold_scale = 0.5) {
    if (!(T >= 100.0)) throw std::invalid_argument("degree_test: T must be >= 100");
    if (samples < 1) throw std::invalid_argument("degree_test: samples must be positive");

    std::vector<double> deltas(samples);
    parallel_for(samples, [&](std::size_t k) {
        EFParams p;
        p.t = T * (1.0 + (k + 0.5) / samples);
        p.L = L;
        deltas[k] = L * std::abs(arch_term_delta(F, G, pair, p).value);
    });

    DegreeTestReport rep;
    rep.rows.reserve(samples);
    double sum = 0.0;
    for (int k = 0; k < samples; ++k) {
        double t = T * (1.0 + (k + 0.5) / samples);
        rep.rows.emplace_back(t, deltas[k]);
        sum += deltas[k];
    }
    rep.mean_scaled_delta = sum / samples;
    rep.threshold = threshold_scale * g_eval(pair, 0.0) * std::log(T);
    rep.distinct = rep.mean_scaled_delta > rep.threshold;
    rep.verdict = rep.distinct ? "distinct degrees" : "consistent with equal degrees";
    return rep;
}

// ------------------------------------------------------------------
// Coefficient probe
// ------------------------------------------------------------------

struct ProbeOptions {
    bool zeros_mode = false;
    const ZeroList* zerosF = nullptr; // required for zeros_mode and for masking
    const ZeroList* zerosG = nullptr;
    bool use_mask = true;
    double arch_halfwidth = 60.0; // EF window per node in zeros mode
};

struct ProbeResult {
    std::uint64_t m = 0;
    Complex estimate = 0.0;
    Complex target = 0.0; // c(m) Lambda(m) / sqrt(m), from coefficients only
    double relative_error = 0.0;
    double T = 0.0, L = 0.0, W = 0.0;
    bool zeros_mode = false;
    double mask_fraction = 0.0;
    double budget = 0.0;
    std::vector<std::array<double, 3>> rows; // (t_mid, panel integral re, im)
};

// The oscillatory integral int L m^{it} (D_F - D_G) dt over the unmasked part
// of [T, 2T], normalized by the unmasked measure and by g(log m / L) so the
// diagonal term converges to c(m) Lambda(m) / sqrt(m) itself.
inline ProbeResult coefficient_probe(const SelbergDatum& F, const SelbergDatum& G, std::uint64_t m,
                                     double T, double L, double W, int n_quad, const FourierPair& pair,
                                     const ProbeOptions& opts = {}) {
    auto pp = prime_power_decompose(m);
    if (!pp) throw std::invalid_argument("coefficient_probe: m must be a prime power >= 2");
    const double gm = g_eval(pair, std::log(static_cast<double>(m)) / L);
    if (!(gm > 1e-6))
        throw std::invalid_argument("coefficient_probe: m exceeds the prime cutoff exp(support*L)");

    // target, from the coefficient side only
    const double lam = std::log(static_cast<double>(pp->first));
    Complex target = delta_c(F, G, m) * lam / std::sqrt(static_cast<double>(m));

    // unmasked intervals
    std::vector<std::pair<double, double>> segs;
    double mask_fraction = 0.0;
    if (opts.use_mask && W > 0.0) {
        if (!opts.zerosF || !opts.zerosG)
            throw std::invalid_argument("coefficient_probe: masked integration needs both zero lists");
        MaskedRange mask = build_mask(F, G, *opts.zerosF, *opts.zerosG, T, W);
        mask_fraction = mask.measure_excluded / T;
        if (mask_fraction > 0.5)
            throw MaskError("coefficient_probe: mask covers more than half of [T, 2T]");
        segs = mask.kept();
    } else {
        segs.emplace_back(T, 2.0 * T);
    }

    // coefficient-mode prime data
    struct Term {
        double logn;
        double weight; // g(log n / L) / sqrt(n)
        Complex clam;  // c(n) Lambda(n)
    };
    std::vector<Term> terms;
    if (!opts.zeros_mode) {
        const double cutoff = std::exp(pair.support_halfwidth * L);
        for (std::uint64_t q : primes_up_to(static_cast<std::uint64_t>(std::min(cutoff, 5e7)))) {
            for (std::uint64_t n = q; static_cast<double>(n) <= cutoff; n *= q) {
                Complex clam = F.b_lambda(n) - G.b_lambda(n);
                double ln = std::log(static_cast<double>(n));
                double gv = g_eval(pair, ln / L);
                if (std::abs(clam) > 0.0 && gv != 0.0)
                    terms.push_back({ln, gv * std::exp(-0.5 * ln), clam});
            }
        }
    } else if (!opts.zerosF || !opts.zerosG) {
        throw std::invalid_argument("coefficient_probe: zeros mode needs both zero lists");
    }

    const double logm = std::log(static_cast<double>(m));
    auto delta_d = [&](double t) -> Complex {
        if (opts.zeros_mode)
            return infer_D_delta_full(F, G, *opts.zerosF, *opts.zerosG, pair, t, L, opts.arch_halfwidth).value;
        Complex s = 0.0;
        for (const auto& tm : terms) {
            double ph = -t * tm.logn;
            Complex osc(std::cos(ph), std::sin(ph));
            s += tm.weight * (tm.clam * osc + std::conj(tm.clam * osc));
        }
        return s / L;
    };
    auto integrand = [&](double t) -> Complex {
        double ph = t * logm;
        return L * Complex(std::cos(ph), std::sin(ph)) * delta_d(t);
    };

    // panel width per the oscillation of m^{it} and of the prime sum / zeros
    const double cutoff_log = pair.support_halfwidth * L;
    double width = std::min({1.0 / std::max(1.0, cutoff_log), 2.0 * detail::kPi / (10.0 * logm),
                             3.0 / (L * pair.support_halfwidth)});
    if (n_quad > 0) width = T / n_quad;

    ProbeResult res;
    res.m = m;
    res.target = target;
    res.T = T;
    res.L = L;
    res.W = opts.use_mask ? W : 0.0;
    res.zeros_mode = opts.zeros_mode;
    res.mask_fraction = mask_fraction;

    Complex integral = 0.0;
    double measure = 0.0;
    double node_budget = 0.0;
    for (const auto& [a, b] : segs) {
        int panels = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
        std::vector<Complex> vals(panels);
        parallel_for(panels, [&](std::size_t k) {
            double pa = a + (b - a) * static_cast<double>(k) / panels;
            double pb = a + (b - a) * static_cast<double>(k + 1) / panels;
            vals[k] = integrate_panels(integrand, pa, pb, 1);
        });
        for (int k = 0; k < panels; ++k) {
            double pa = a + (b - a) * static_cast<double>(k) / panels;
            double pb = a + (b - a) * static_cast<double>(k + 1) / panels;
            integral += vals[k];
            res.rows.push_back({0.5 * (pa + pb), vals[k].real(), vals[k].imag()});
        }
        measure += b - a;
    }
    if (opts.zeros_mode) {
        // representative per-node reconstruction budget, scaled through the estimate
        node_budget = infer_D_delta_full(F, G, *opts.zerosF, *opts.zerosG, pair, T + 0.5 * T, L,
                                         opts.arch_halfwidth)
                          .budget;
    }

    res.estimate = integral / (measure * gm);
    res.budget = L * node_budget / gm;
    double tmag = std::abs(target);
    res.relative_error = tmag > 1e-14 ? std::abs(res.estimate - target) / tmag
                                      : std::abs(res.estimate - target);
    return res;
}

// ------------------------------------------------------------------
// Mean-value check
// ------------------------------------------------------------------

struct MeanValueReport {
    double lhs_integral = 0.0;
    double rhs_bound = 0.0;
    double ratio = 0.0;
    int prime_terms = 0;
    std::vector<std::pair<double, double>> rows; // (t_mid, panel integral)
};

// Second moment of the weighted p^2-coefficient difference against the
// Montgomery-Vaughan-shaped majorant sum.
inline MeanValueReport mean_value_check(const SelbergDatum& F, const SelbergDatum& G,
                                        const FourierPair& pair, double T, double L, int n_quad = 0) {
    struct Term {
        double twologp;
        double amp; // |g(2 log p / L)| log p / p weight (signed via coef)
        Complex coef;
    };
    std::vector<Term> terms;
    double rhs = 0.0;
    const double cutoff = std::exp(0.5 * pair.support_halfwidth * L);
    int nterms = 0;
    for (std::uint64_t q : primes_up_to(static_cast<std::uint64_t>(std::min(cutoff, 5e7)))) {
        Complex da = F.a(q * q) - G.a(q * q);
        if (std::abs(da) == 0.0) continue;
        double lp = std::log(static_cast<double>(q));
        double gv = g_eval(pair, 2.0 * lp / L);
        if (gv != 0.0) {
            terms.push_back({2.0 * lp, lp * gv / static_cast<double>(q), da});
            ++nterms;
        }
        rhs += std::norm(da) * (T + static_cast<double>(q)) * lp * lp /
               (static_cast<double>(q) * static_cast<double>(q));
    }

    auto psum = [&](double t) {
        Complex s = 0.0;
        for (const auto& tm : terms) {
            double ph = -t * tm.twologp;
            s += tm.coef * tm.amp * Complex(std::cos(ph), std::sin(ph));
        }
        return std::norm(s);
    };

    double maxfreq = terms.empty() ? 1.0 : 2.0 * terms.back().twologp;
    double width = std::min(0.5, 2.0 * detail::kPi / (10.0 * maxfreq));
    int panels = n_quad > 0 ? n_quad : static_cast<int>(std::ceil(T / width));

    MeanValueReport rep;
    rep.prime_terms = nterms;
    std::vector<double> vals(panels);
    parallel_for(panels, [&](std::size_t k) {
        double a = T * (1.0 + static_cast<double>(k) / panels);
        double b = T * (1.0 + static_cast<double>(k + 1) / panels);
        vals[k] = integrate_panels(psum, a, b, 1);
    });
    for (int k = 0; k < panels; ++k) {
        double a = T * (1.0 + static_cast<double>(k) / panels);
        double b = T * (1.0 + static_cast<double>(k + 1) / panels);
        rep.lhs_integral += vals[k];
        rep.rows.emplace_back(0.5 * (a + b), vals[k]);
    }
    rep.rhs_bound = rhs;
    rep.ratio = rhs > 0.0 ? rep.lhs_integral / rhs : 0.0;
    return rep;
}

// ------------------------------------------------------------------
// Masked Z bound
// ------------------------------------------------------------------

struct MaskedZReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double mask_measure = 0.0;
    double lhs_uncertainty = 0.0;
    std::vector<std::pair<double, double>> rows; // (t_mid, panel integral)
};

// L int over the unmasked set of |Z_F - Z_G| against the bound
// 1 + T log T int_{|y| >= L/(W log T)} |h(y)| dy, with the pair's actual
// tail integral on the right.
inline MaskedZReport masked_Z_bound_check(const SelbergDatum& F, const SelbergDatum& G,
                                          const ZeroList& zF, const ZeroList& zG, const FourierPair& pair,
                                          double T, double L, double W, int n_quad = 0) {
    MaskedRange mask = build_mask(F, G, zF, zG, T, W);
    auto segs = mask.kept();

    EFParams base;
    base.L = L;
    base.zero_height = std::min(zF.t_max, zG.t_max);

    auto dz = [&](double t) {
        EFParams p = base;
        p.t = t;
        return std::abs(zero_sum(F, zF, pair, p).value - zero_sum(G, zG, pair, p).value);
    };

    double width = std::min(0.25, 2.0 / L);
    MaskedZReport rep;
    rep.mask_measure = mask.measure_excluded;
    for (const auto& [a, b] : segs) {
        int panels = n_quad > 0
                         ? std::max(1, static_cast<int>(std::ceil(n_quad * (b - a) / T)))
                         : std::max(1, static_cast<int>(std::ceil((b - a) / width)));
        std::vector<double> vals(panels);
        parallel_for(panels, [&](std::size_t k) {
            double pa = a + (b - a) * static_cast<double>(k) / panels;
            double pb = a + (b - a) * static_cast<double>(k + 1) / panels;
            vals[k] = integrate_panels(dz, pa, pb, 1);
        });
        for (int k = 0; k < panels; ++k) {
            double pa = a + (b - a) * static_cast<double>(k) / panels;
            double pb = a + (b - a) * static_cast<double>(k + 1) / panels;
            rep.lhs += L * vals[k];
            rep.rows.emplace_back(0.5 * (pa + pb), L * vals[k]);
        }
    }
    {
        EFParams p = base;
        p.t = 1.5 * T;
        rep.lhs_uncertainty =
            L * (zero_sum(F, zF, pair, p).tail_bound + zero_sum(G, zG, pair, p).tail_bound) *
            (2.0 * T - T - mask.measure_excluded);
    }

    // rhs: 1 + T log T * int_{|y| >= y0} |h(y)| dy with the pair's actual h
    const double y0 = L / (W * std::log(T));
    double hint = 0.0;
    {
        double y = y0;
        const double ymax = std::max(4.0 * y0, 4.0 / y0) + 1e4;
        double step = 0.25;
        while (y < ymax) {
            hint += integrate_panels([&](double u) { return std::abs(h_eval_real(pair, u)); }, y,
                                     y + step * 16.0, 16);
            y += step * 16.0;
            if (h_envelope(pair, y) < 1e-12) break;
        }
        hint += envelope_tail_integral(pair, y, 1.0, 0.0);
        hint *= 2.0; // both sides
    }
    rep.rhs = 1.0 + T * std::log(T) * hint;
    rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

} // namespace eflab
