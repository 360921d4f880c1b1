#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "eflab/errors.hpp"
#include "eflab/lfunction.hpp"
#include "eflab/parallel.hpp"

namespace eflab {

// Sorted positive critical-line ordinates up to t_max, with a completeness
// certificate from the argument principle. Negative ordinates are implied by
// conjugation for the real-coefficient data this scanner supports.
struct ZeroList {
    std::vector<double> ordinates;
    double t_max = 0.0;
    bool complete = false;
    std::string source;
};

// Hardy-style rotated form: Z(t) = omega^{-1/2} e^{i Im w(1/2+it)} F(1/2+it)
// is real on the critical line and changes sign exactly at its zeros. Only
// the imaginary part of the log prefactor enters, so the gamma decay cannot
// underflow it at large t.
inline double rotated_real_form(const SelbergDatum& F, double t, const EvalOptions& opts = {}) {
    if (!F.real_coefficients)
        throw std::invalid_argument(F.name + ": rotated real form needs real coefficients (self-dual)");
    Complex s(0.5, t);
    Complex sq = std::sqrt(F.omega);
    Complex z = std::conj(sq) * std::exp(Complex(0.0, log_prefactor(F, s).imag())) * l_value(F, s, opts);
    if (std::abs(z.imag()) > 1e-6 * std::abs(z) && std::abs(z.imag()) > 1e-10)
        throw PhaseError(F.name + ": rotated form not real; omega or gamma data inconsistent");
    return z.real();
}

namespace detail {

// Continuous argument of F along 2 -> 2+iT -> 1/2+iT. On the vertical leg the
// value stays inside the disk |w - 1| < 1 for every built-in factor
// (|a(n)| <= 1 gives |F(2+it) - 1| <= zeta(2) - 1), so the principal argument
// is already the continuous one. The horizontal leg is tracked stepwise.
inline double track_arg_to_half(const SelbergDatum& F, double T, const EvalOptions& opts) {
    Complex start = l_value(F, Complex(2.0, 0.0), opts);
    if (!(start.real() > 0.0) || std::abs(start.imag()) > 1e-9 * std::abs(start))
        throw CompletenessError(F.name + ": F(2) not real positive; phase reference invalid", 0.0, T);

    Complex cur = l_value(F, Complex(2.0, T), opts);
    double acc = std::arg(cur);

    double pos = 2.0;
    double step = 0.25;
    while (pos > 0.5) {
        double next = std::max(0.5, pos - step);
        Complex v = l_value(F, Complex(next, T), opts);
        double da = std::arg(v / cur);
        if (std::abs(da) > 1.4 || std::abs(v) == 0.0) {
            step *= 0.5;
            if (step < 1e-6)
                throw CompletenessError(F.name + ": phase tracking failed near the critical line", T, T);
            continue;
        }
        acc += da;
        cur = v;
        pos = next;
        if (std::abs(da) < 0.2) step = std::min(0.25, step * 1.6);
    }
    return acc;
}

} // namespace detail

// N_+(T): number of zeros of the completed function with 0 < Im rho <= T, by
// the argument principle: N_+ = m + [Im w(1/2+iT) + Darg F]/pi. The result is
// a double that should sit within ~0.05 of an integer when T avoids zeros.
inline double argument_principle_count(const SelbergDatum& F, double T, const EvalOptions& opts = {}) {
    if (F.kind == SelbergDatum::Kind::product) {
        double n = 0.0;
        for (const auto& f : F.factors) n += argument_principle_count(*f, T, opts);
        return n;
    }
    double theta = log_prefactor(F, Complex(0.5, T)).imag();
    double darg = detail::track_arg_to_half(F, T, opts);
    return F.pole_order + (theta + darg) / detail::kPi;
}

namespace detail {

inline double bisect_zero(const SelbergDatum& F, double lo, double hi, const EvalOptions& opts) {
    double flo = rotated_real_form(F, lo, opts);
    for (int it = 0; it < 64 && hi - lo > 1e-10; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = rotated_real_form(F, mid, opts);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

inline ZeroList scan_zeros_direct(const SelbergDatum& F, double t_max, double mesh,
                                  const EvalOptions& opts, bool allow_retry) {
    const std::size_t n = static_cast<std::size_t>(std::ceil(t_max / mesh));
    std::vector<double> ts(n + 1), zs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) ts[i] = std::min(t_max, i * mesh);

    parallel_for(n + 1, [&](std::size_t i) { zs[i] = rotated_real_form(F, ts[i], opts); });

    ZeroList list;
    list.t_max = t_max;
    list.source = F.name;
    for (std::size_t i = 0; i + 1 <= n; ++i) {
        if (zs[i] == 0.0 && ts[i] > 0.0) {
            list.ordinates.push_back(ts[i]);
        } else if ((zs[i] < 0.0) != (zs[i + 1] < 0.0) && zs[i + 1] != 0.0) {
            list.ordinates.push_back(bisect_zero(F, ts[i], ts[i + 1], opts));
        }
    }

    // certificate height: back off the end of the range if Z is locally tiny
    double scale = 0.0;
    for (std::size_t i = n >= 50 ? n - 50 : 0; i <= n; ++i) scale = std::max(scale, std::abs(zs[i]));
    double Tc = t_max;
    for (int tries = 0; tries < 6 && std::abs(rotated_real_form(F, Tc, opts)) < 0.02 * scale; ++tries)
        Tc -= 0.37 * mesh;

    std::size_t counted = 0;
    for (double g : list.ordinates)
        if (g <= Tc) ++counted;

    double predicted = argument_principle_count(F, Tc, opts);
    long rounded = std::lround(predicted);
    bool phase_ok = std::abs(predicted - rounded) < 0.1;
    list.complete = phase_ok && rounded == static_cast<long>(counted);

    if (!list.complete && allow_retry)
        return scan_zeros_direct(F, t_max, mesh / 5.0, opts, false);

    if (!list.complete) {
        // localize the first disagreeing height range for the error report
        double lo = 0.0, hi = Tc;
        for (int it = 0; it < 24 && hi - lo > 1.0; ++it) {
            double mid = 0.5 * (lo + hi);
            long pm = std::lround(argument_principle_count(F, mid, opts));
            long cm = 0;
            for (double g : list.ordinates)
                if (g <= mid) ++cm;
            if (pm != cm)
                hi = mid;
            else
                lo = mid;
        }
        throw CompletenessError(F.name + ": zero scan incomplete (scan count vs argument principle)", lo, hi);
    }
    return list;
}

} // namespace detail

inline ZeroList merge_zero_lists(const ZeroList& a, const ZeroList& b, const std::string& name) {
    ZeroList out;
    out.source = name;
    out.t_max = std::min(a.t_max, b.t_max);
    out.complete = a.complete && b.complete;
    out.ordinates.resize(a.ordinates.size() + b.ordinates.size());
    std::merge(a.ordinates.begin(), a.ordinates.end(), b.ordinates.begin(), b.ordinates.end(),
               out.ordinates.begin());
    return out;
}

// All critical-line zeros with 0 < gamma <= t_max, found by sign changes of
// the rotated form at the given mesh, bisection-refined, and certified
// against the argument-principle count. Products scan their factors and
// merge (the zero set of a product is the union with multiplicity; direct
// sign scanning could miss the near-coincident pairs a union produces).
inline ZeroList scan_zeros(const SelbergDatum& F, double t_max, double mesh, const EvalOptions& opts = {}) {
    if (!(t_max > 0.0 && t_max <= 1e4)) throw std::invalid_argument("scan_zeros: t_max must be in (0, 1e4]");
    if (!(mesh > 0.0 && mesh <= 0.05)) throw std::invalid_argument("scan_zeros: mesh must be in (0, 0.05]");
    if (F.kind == SelbergDatum::Kind::product) {
        ZeroList acc = scan_zeros(*F.factors[0], t_max, mesh, opts);
        for (std::size_t i = 1; i < F.factors.size(); ++i)
            acc = merge_zero_lists(acc, scan_zeros(*F.factors[i], t_max, mesh, opts), F.name);
        acc.source = F.name;
        return acc;
    }
    return detail::scan_zeros_direct(F, t_max, mesh, opts, true);
}

inline double default_scan_mesh(double t_max) { return t_max <= 100.0 ? 0.02 : 0.01; }

struct CountReport {
    double T = 0.0;
    long counted = 0;           // zeros with |Im rho| <= T (both halves)
    double predicted_main = 0.0; // (d/pi) T log T + c_F T
    double discrepancy = 0.0;
    double c_fit = 0.0;
    bool exact_match = false;   // scan count == argument-principle count
};

// Compares the scanned zero count against the density main term. The linear
// constant c_F is fitted once per datum from the theta phase at a reference
// height rather than derived symbolically from the gamma data.
inline CountReport zero_count_check(const SelbergDatum& F, double T, const EvalOptions& opts = {}) {
    if (!(T >= 10.0)) throw std::invalid_argument("zero_count_check: T must be >= 10");
    ZeroList list = scan_zeros(F, T, default_scan_mesh(T), opts);

    const double d = F.degree();
    const double Tref = 100.0;
    double theta_ref = 0.0;
    std::function<double(const SelbergDatum&)> theta_sum = [&](const SelbergDatum& G) -> double {
        if (G.kind == SelbergDatum::Kind::product) {
            double s = 0.0;
            for (const auto& f : G.factors) s += theta_sum(*f);
            return s;
        }
        return log_prefactor(G, Complex(0.5, Tref)).imag();
    };
    theta_ref = theta_sum(F);
    double c = (2.0 * theta_ref / detail::kPi - (d / detail::kPi) * Tref * std::log(Tref)) / Tref;

    CountReport rep;
    rep.T = T;
    rep.counted = 2 * static_cast<long>(list.ordinates.size());
    rep.c_fit = c;
    rep.predicted_main = (d / detail::kPi) * T * std::log(T) + c * T;
    rep.discrepancy = rep.counted - rep.predicted_main;
    rep.exact_match = list.complete;
    return rep;
}

} // namespace eflab
