#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eflab/characters.hpp"
#include "eflab/errors.hpp"
#include "eflab/gamma.hpp"
#include "eflab/primes.hpp"

namespace eflab {

// One factor Gamma(lambda s + mu) of the completed function.
struct GammaFactor {
    double lambda = 0.5;
    Complex mu = 0.0;
};

// Full analytic datum of a Selberg-class element: Dirichlet coefficients a(n),
// log-derivative coefficients b(n)Lambda(n), functional-equation data
// (Q, gamma factors, omega), and the pole order at s = 1. Immutable after
// construction; coefficient generators must be pure.
struct SelbergDatum {
    enum class Kind { coefficients_only, zeta, dirichlet, product };

    std::string name;
    std::function<Complex(std::uint64_t)> a;        // a(n), a(1) = 1
    std::function<Complex(std::uint64_t)> b_lambda; // b(n) * Lambda(n), 0 off prime powers
    std::vector<GammaFactor> gamma_factors;
    double Q = 1.0;
    Complex omega = 1.0;
    int pole_order = 0;

    Kind kind = Kind::coefficients_only;
    std::optional<DirichletCharacter> chi;                     // kind == dirichlet
    std::vector<std::shared_ptr<const SelbergDatum>> factors;  // kind == product
    bool real_coefficients = true;

    double degree() const {
        double s = 0.0;
        for (const auto& g : gamma_factors) s += g.lambda;
        return 2.0 * s;
    }
};

inline void validate_datum(const SelbergDatum& d) {
    if (std::abs(d.a(1) - Complex(1.0)) > 1e-12)
        throw std::invalid_argument(d.name + ": a(1) must be 1");
    if (std::abs(std::abs(d.omega) - 1.0) > 1e-9)
        throw std::invalid_argument(d.name + ": |omega| must be 1");
    if (!(d.Q > 0.0))
        throw std::invalid_argument(d.name + ": Q must be positive");
    if (d.pole_order < 0)
        throw std::invalid_argument(d.name + ": pole order must be nonnegative");
    for (const auto& g : d.gamma_factors) {
        if (!(g.lambda > 0.0))
            throw std::invalid_argument(d.name + ": gamma-factor lambda must be positive");
        if (g.mu.real() < -1e-12)
            throw std::invalid_argument(d.name + ": gamma-factor Re mu must be >= 0");
    }
    // b(n)Lambda(n) vanishes off prime powers (spot check)
    for (std::uint64_t n : {6u, 10u, 12u, 15u, 30u})
        if (std::abs(d.b_lambda(n)) > 1e-12)
            throw std::invalid_argument(d.name + ": b(n)Lambda(n) must vanish off prime powers");
}

// Riemann zeta as a Selberg datum: a(n) = 1, b Lambda = von Mangoldt,
// Phi(s) = pi^{-s/2} Gamma(s/2) zeta(s).
inline SelbergDatum make_zeta() {
    SelbergDatum d;
    d.name = "zeta";
    d.kind = SelbergDatum::Kind::zeta;
    d.a = [](std::uint64_t) { return Complex(1.0); };
    d.b_lambda = [](std::uint64_t n) { return Complex(von_mangoldt(n)); };
    d.gamma_factors = {GammaFactor{0.5, 0.0}};
    d.Q = 1.0 / std::sqrt(detail::kPi);
    d.omega = 1.0;
    d.pole_order = 1;
    d.real_coefficients = true;
    validate_datum(d);
    return d;
}

// Dirichlet L-function of a primitive non-principal character. The root
// number comes from the Gauss sum, omega = tau(chi) / (i^a sqrt(q)); it is
// validated downstream by the functional-equation residual gate.
inline SelbergDatum make_dirichlet_l(const DirichletCharacter& chi_in) {
    validate_character(chi_in);
    if (chi_in.modulus <= 1 || chi_in.is_principal())
        throw std::invalid_argument("make_dirichlet_l: principal character has no clean functional equation");
    if (!chi_in.is_primitive())
        throw std::invalid_argument("make_dirichlet_l: character must be primitive");

    SelbergDatum d;
    d.kind = SelbergDatum::Kind::dirichlet;
    d.chi = chi_in;
    d.name = "L(" + chi_in.label + ")";
    const double q = chi_in.modulus;
    const int a = chi_in.parity();

    d.a = [chi = chi_in](std::uint64_t n) { return chi(n); };
    d.b_lambda = [chi = chi_in](std::uint64_t n) -> Complex {
        auto pp = prime_power_decompose(n);
        if (!pp) return 0.0;
        auto [p, k] = *pp;
        Complex cp = chi(p);
        if (std::abs(cp) < 0.5) return 0.0; // ramified prime: Euler factor is 1
        Complex v = 1.0;
        for (int i = 0; i < k; ++i) v *= cp;
        return v * std::log(static_cast<double>(p));
    };
    d.gamma_factors = {GammaFactor{0.5, 0.5 * a}};
    d.Q = std::sqrt(q / detail::kPi);
    Complex i_pow_a = (a == 0) ? Complex(1.0) : Complex(0.0, 1.0);
    d.omega = gauss_sum(chi_in) / (i_pow_a * std::sqrt(q));
    d.pole_order = 0;
    d.real_coefficients = chi_in.has_real_values();
    validate_datum(d);
    return d;
}

// Product F*G: coefficients convolve, log-coefficients add, completion data
// multiply/concatenate. Used to build degree-2 test objects.
inline SelbergDatum make_product(const SelbergDatum& F, const SelbergDatum& G) {
    auto pf = std::make_shared<const SelbergDatum>(F);
    auto pg = std::make_shared<const SelbergDatum>(G);

    SelbergDatum d;
    d.kind = SelbergDatum::Kind::product;
    d.name = F.name + "*" + G.name;
    d.factors = {pf, pg};
    d.a = [pf, pg](std::uint64_t n) {
        Complex s = 0.0;
        for (std::uint64_t dd : divisors(n)) s += pf->a(dd) * pg->a(n / dd);
        return s;
    };
    d.b_lambda = [pf, pg](std::uint64_t n) { return pf->b_lambda(n) + pg->b_lambda(n); };
    d.gamma_factors = F.gamma_factors;
    d.gamma_factors.insert(d.gamma_factors.end(), G.gamma_factors.begin(), G.gamma_factors.end());
    d.Q = F.Q * G.Q;
    d.omega = F.omega * G.omega;
    d.pole_order = F.pole_order + G.pole_order;
    d.real_coefficients = F.real_coefficients && G.real_coefficients;
    validate_datum(d);
    return d;
}

// c(n) = b_F(n) - b_G(n): the coefficient difference driving every comparison.
inline Complex delta_c(const SelbergDatum& F, const SelbergDatum& G, std::uint64_t n) {
    auto pp = prime_power_decompose(n);
    if (!pp) return 0.0;
    double lam = std::log(static_cast<double>(pp->first));
    return (F.b_lambda(n) - G.b_lambda(n)) / lam;
}

// ------------------------------------------------------------------
// Exceptional-set and coefficient-growth condition checkers
// ------------------------------------------------------------------

// The set of primes where a_F(p) and a_G(p) may disagree. Either an explicit
// finite list or a predicate; density parameters are informational.
struct ExceptionalSet {
    std::vector<std::uint64_t> list; // sorted primes, used when predicate empty
    std::function<bool(std::uint64_t)> predicate;
    std::optional<double> delta;
    std::optional<double> constant;

    static ExceptionalSet from_list(std::vector<std::uint64_t> primes) {
        for (auto p : primes)
            if (!is_prime(p)) throw std::invalid_argument("ExceptionalSet: non-prime member");
        std::sort(primes.begin(), primes.end());
        ExceptionalSet e;
        e.list = std::move(primes);
        return e;
    }
    static ExceptionalSet from_predicate(std::function<bool(std::uint64_t)> pred) {
        ExceptionalSet e;
        e.predicate = std::move(pred);
        return e;
    }
    bool contains(std::uint64_t p) const {
        if (predicate) return predicate(p);
        return std::binary_search(list.begin(), list.end(), p);
    }
};

struct ThinnessRow {
    double x;
    std::uint64_t count;
    double fitted_c; // count / x^{1/2 - delta}
};

struct ThinnessReport {
    bool passes = false;
    double fitted_constant = 0.0; // smallest C with count <= C x^{1/2-delta} on the grid
    double delta = 0.0;
    double ceiling = 0.0;
    std::vector<ThinnessRow> counts;
};

// Counts members of E on a geometric grid (32 points per decade) up to x_max
// and fits the smallest C with #(E up to x) <= C x^{1/2-delta}.
inline ThinnessReport check_exceptional_thinness(const ExceptionalSet& E, double x_max, double delta,
                                                 double ceiling = 10.0) {
    if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("thinness: delta must be in (0, 1/2)");
    if (!(x_max >= 10.0)) throw std::invalid_argument("thinness: x_max must be >= 10");

    std::vector<double> grid;
    const double step = std::pow(10.0, 1.0 / 32.0);
    for (double x = 10.0; x < x_max * (1.0 - 1e-12); x *= step) grid.push_back(x);
    grid.push_back(x_max);

    ThinnessReport rep;
    rep.delta = delta;
    rep.ceiling = ceiling;
    rep.counts.reserve(grid.size());

    std::size_t gi = 0;
    std::uint64_t running = 0;
    const double expo = 0.5 - delta;
    for_each_prime(static_cast<std::uint64_t>(x_max), [&](std::uint64_t p) {
        while (gi < grid.size() && static_cast<double>(p) > grid[gi]) {
            rep.counts.push_back({grid[gi], running, running / std::pow(grid[gi], expo)});
            ++gi;
        }
        if (E.contains(p)) ++running;
    });
    while (gi < grid.size()) {
        rep.counts.push_back({grid[gi], running, running / std::pow(grid[gi], expo)});
        ++gi;
    }

    double cmax = 0.0;
    for (const auto& row : rep.counts) cmax = std::max(cmax, row.fitted_c);
    rep.fitted_constant = cmax;
    rep.passes = cmax <= ceiling;
    return rep;
}

struct GrowthRow {
    double x;
    double sum;    // S(x) = sum_{p <= e^x} diff(p)^2 log p / p
    double ratio1; // S(x) / x
    double ratio3; // S(x) / exp(x / (log x (log log x)^5))
};

struct GrowthReport {
    double sum_at_x = 0.0;
    double bound_1_ratio = 0.0;
    double bound_3_ratio = 0.0;
    std::vector<GrowthRow> rows;
};

// Evaluates the averaged second-moment sum S(x) of a coefficient difference
// on a linear grid of x up to x_max and reports it against the two growth
// envelopes (linear, and the iterated-log-weakened exponential).
inline GrowthReport check_growth_conditions(const std::function<double(std::uint64_t)>& diff, double x_max) {
    if (!(x_max >= 10.0)) throw std::invalid_argument("growth: x_max must be >= 10");

    std::vector<double> grid;
    for (double x = 3.0; x < x_max - 1e-9; x += 0.5) grid.push_back(x);
    grid.push_back(x_max);

    auto envelope3 = [](double x) {
        double l1 = std::log(x);
        double l2 = std::log(l1);
        double e = x / (l1 * std::pow(l2, 5.0));
        return std::exp(std::min(e, 700.0));
    };

    GrowthReport rep;
    rep.rows.reserve(grid.size());
    std::size_t gi = 0;
    double running = 0.0;
    const std::uint64_t limit = static_cast<std::uint64_t>(std::ceil(std::exp(x_max)));
    for_each_prime(limit, [&](std::uint64_t p) {
        double lp = std::log(static_cast<double>(p));
        while (gi < grid.size() && lp > grid[gi]) {
            rep.rows.push_back({grid[gi], running, running / grid[gi], running / envelope3(grid[gi])});
            ++gi;
        }
        double dv = diff(p);
        running += dv * dv * lp / static_cast<double>(p);
    });
    while (gi < grid.size()) {
        rep.rows.push_back({grid[gi], running, running / grid[gi], running / envelope3(grid[gi])});
        ++gi;
    }

    const auto& last = rep.rows.back();
    rep.sum_at_x = last.sum;
    rep.bound_1_ratio = last.ratio1;
    rep.bound_3_ratio = last.ratio3;
    return rep;
}

} // namespace eflab
