#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eflab/errors.hpp"
#include "eflab/gamma.hpp"
#include "eflab/quadrature.hpp"

namespace eflab {

namespace detail {

// sin(z)/z with a Taylor fallback near the removable singularity.
inline Complex sinc(Complex z) {
    if (std::abs(z) < 1e-4) {
        Complex z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
    }
    return std::sin(z) / z;
}

inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

} // namespace detail

struct InghamSpec {
    int N = 2;
    double alpha = 1.0;
    int M = 1;
};

// A Fourier pair (g, h) under the convention h(s) = int g(u) e^{isu} du,
// g(x) = (1/2pi) int h(u) e^{-ixu} du. The sinc_product family has
// h(t) = prod_i (sin(X_i t / 2) / (X_i t / 2))^2, so g is the convolution of
// unit-mass triangles of half-widths X_i, supported in [-sum X_i, sum X_i].
struct FourierPair {
    enum class Family { sinc_product, table };

    Family family = Family::sinc_product;
    std::vector<double> widths;
    double support_halfwidth = 0.0;
    int truncation = 0;       // retained factors M when the width list is conceptually infinite
    double tail_coeff = 0.0;  // sum of X_n^2 over the dropped factors
    std::optional<InghamSpec> ingham;

    // Bound on the relative effect of the dropped factors at real argument t:
    // each omitted factor is >= 1 - (X_n t)^2 / 3.
    double tail_bound(double t) const { return tail_coeff * t * t / 3.0; }
};

inline FourierPair sinc_product_pair(std::vector<double> widths) {
    if (widths.empty()) throw std::invalid_argument("sinc_product_pair: widths must be nonempty");
    for (double x : widths)
        if (!(x > 0.0)) throw std::invalid_argument("sinc_product_pair: widths must be positive");
    FourierPair p;
    p.widths = std::move(widths);
    for (double x : p.widths) p.support_halfwidth += x;
    return p;
}

// Widths X_n = alpha / (n (log(n+1))^{3/2}) for n = N .. N+M-1. alpha scales
// the total support; consumers rescale via the L parameter, so any alpha
// carries the same decay class.
inline std::vector<double> ingham_widths(int N, double alpha, int M) {
    if (N < 2) throw std::invalid_argument("ingham_widths: N must be >= 2");
    if (M < 1) throw std::invalid_argument("ingham_widths: M must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("ingham_widths: alpha must be positive");
    std::vector<double> w;
    w.reserve(M);
    for (int n = N; n < N + M; ++n)
        w.push_back(alpha / (n * std::pow(std::log(n + 1.0), 1.5)));
    return w;
}

// Truncated Ingham product pair with its dropped-factor tail coefficient.
inline FourierPair ingham_pair(int N, double alpha, int M) {
    FourierPair p = sinc_product_pair(ingham_widths(N, alpha, M));
    p.truncation = M;
    p.ingham = InghamSpec{N, alpha, M};
    // sum_{n >= N+M} X_n^2, summed directly then closed off with an integral bound
    double s = 0.0;
    const long K = 100000;
    for (long n = N + M; n < N + M + K; ++n) {
        double x = alpha / (n * std::pow(std::log(n + 1.0), 1.5));
        s += x * x;
    }
    const double tailn = static_cast<double>(N + M + K);
    s += 1.05 * alpha * alpha / (tailn * std::pow(std::log(tailn), 3.0));
    p.tail_coeff = s;
    return p;
}

// h at a complex argument (entire function).
inline Complex h_eval(const FourierPair& pair, Complex s) {
    Complex v = 1.0;
    for (double x : pair.widths) {
        Complex f = detail::sinc(0.5 * x * s);
        v *= f * f;
    }
    return v;
}

inline double h_eval_real(const FourierPair& pair, double t) {
    double v = 1.0;
    for (double x : pair.widths) {
        double f = detail::sinc(0.5 * x * t);
        v *= f * f;
    }
    return v;
}

// Pointwise envelope for |h| on the real axis: prod_i min(1, (2/(X_i y))^2).
inline double h_envelope(const FourierPair& pair, double y) {
    double ay = std::abs(y);
    if (ay == 0.0) return 1.0;
    double v = 1.0;
    for (double x : pair.widths) {
        double u = 2.0 / (x * ay);
        if (u < 1.0) v *= u * u;
    }
    return v;
}

// Upper bound for int_{y0}^inf envelope(y) (a + b log(1+y)) dy. Geometric
// panels with the (decreasing) envelope frozen at the left edge, closed off
// with the power-law remainder once every factor has entered its decay range.
inline double envelope_tail_integral(const FourierPair& pair, double y0, double a = 1.0, double b = 0.0) {
    double xmin = *std::min_element(pair.widths.begin(), pair.widths.end());
    const double knee = 2.0 / xmin;
    const int m = static_cast<int>(pair.widths.size());
    double y = std::max(y0, 1e-9);
    double acc = 0.0;
    while (y < std::max(4.0 * knee, 4.0 * y0)) {
        double ynext = y * 1.25;
        acc += h_envelope(pair, y) * (a + b * std::log(1.0 + ynext)) * (ynext - y);
        y = ynext;
    }
    acc += h_envelope(pair, y) * y / (2.0 * m - 1.0) * (a + b * (std::log(1.0 + y) + 1.0));
    return acc;
}

namespace detail {

inline double triangle(double u, double X) {
    double t = 1.0 - std::abs(u) / X;
    return t > 0.0 ? t / X : 0.0;
}

// Exact (tri_{X1} * tri_{X2})(x): the integrand is piecewise quadratic in v,
// so two-point Gauss on each piece between breakpoints is exact.
inline double triangle_convolution(double x, double X1, double X2) {
    double lo = std::max(-X1, x - X2);
    double hi = std::min(X1, x + X2);
    if (lo >= hi) return 0.0;
    // interior kinks can only sit at v = 0 (first triangle) and v = x (second)
    std::vector<double> pts;
    for (double v : {lo, 0.0, x, hi})
        if (v > lo - 1e-15 && v < hi + 1e-15) pts.push_back(std::clamp(v, lo, hi));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const double g2 = 1.0 / std::sqrt(3.0);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double mid = 0.5 * (pts[i] + pts[i + 1]);
        double half = 0.5 * (pts[i + 1] - pts[i]);
        for (double sgn : {-1.0, 1.0}) {
            double v = mid + sgn * g2 * half;
            acc += half * triangle(v, X1) * triangle(x - v, X2);
        }
    }
    return acc;
}

} // namespace detail

// g at a real argument. One and two widths are evaluated in closed form
// (triangle and exact piecewise triangle convolution); longer products fall
// back to the cosine-transform quadrature (1/pi) int_0^inf h(u) cos(xu) du.
inline double g_eval(const FourierPair& pair, double x) {
    const double X = pair.support_halfwidth;
    if (std::abs(x) >= X * (1.0 + 1e-12)) return 0.0;
    if (pair.widths.size() == 1) return detail::triangle(x, pair.widths[0]);
    if (pair.widths.size() == 2) return detail::triangle_convolution(x, pair.widths[0], pair.widths[1]);

    // oscillation scale: h carries frequencies up to sum X_i, the kernel |x|
    const double freq = X + std::abs(x) + 1.0;
    const double panel_w = detail::kPi / (4.0 * freq);
    double acc = 0.0;
    double u = 0.0;
    int quiet = 0;
    while (u < 1e7) {
        double step = panel_w * 16.0;
        double part = integrate_panels([&](double uu) { return h_eval_real(pair, uu) * std::cos(x * uu); },
                                       u, u + step, 16);
        acc += part;
        u += step;
        if (std::abs(part) < 1e-13 * std::max(1.0, std::abs(acc)) && h_envelope(pair, u) < 1e-12)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3) return acc / detail::kPi;
    }
    throw QuadratureError("g_eval: cosine transform did not converge");
}

struct DecayReport {
    double max_ratio = 0.0;
    double worst_t = 0.0;
    bool holds = false;
    std::vector<std::pair<double, double>> samples; // (t, ratio)
};

// Checks |h(t)| against the almost-exponential envelope exp(-|t|/log^2|t|):
// reports r(t) = |h(t)| exp(|t|/log^2 t) over the grid. holds means the grid
// maximum is attained away from the final 10% of points, i.e. r is not still
// growing at the end of the sweep.
inline DecayReport verify_decay(const FourierPair& pair, const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw std::invalid_argument("verify_decay: empty grid");
    for (double t : t_grid)
        if (!(t >= 10.0)) throw std::invalid_argument("verify_decay: grid values must be >= 10");
    DecayReport rep;
    rep.samples.reserve(t_grid.size());
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        double t = t_grid[i];
        double lt = std::log(t);
        double r = std::abs(h_eval_real(pair, t)) * std::exp(t / (lt * lt));
        rep.samples.emplace_back(t, r);
        if (r > rep.max_ratio) {
            rep.max_ratio = r;
            rep.worst_t = t;
            argmax = i;
        }
    }
    std::size_t tail_len = std::max<std::size_t>(2, t_grid.size() / 10);
    std::size_t tail_start = t_grid.size() > tail_len ? t_grid.size() - tail_len : 1;
    rep.holds = argmax < tail_start;
    return rep;
}

// 64 log-spaced points per decade, inclusive of both ends.
inline std::vector<double> default_decay_grid(double t_lo, double t_hi) {
    std::vector<double> g;
    const double step = std::pow(10.0, 1.0 / 64.0);
    for (double t = t_lo; t < t_hi * (1.0 - 1e-12); t *= step) g.push_back(t);
    g.push_back(t_hi);
    return g;
}

} // namespace eflab
