#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace eflab {

// Simple sieve returning all primes <= limit.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (comp[p]) continue;
        for (std::uint64_t q = p * p; q <= limit; q += p) comp[q] = true;
    }
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (!comp[n]) out.push_back(n);
    return out;
}

// Streams primes <= limit in increasing order through fn, using a segmented
// bit sieve over odd numbers (memory stays at segment size, so limits around
// 5e8 are fine).
inline void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn) {
    if (limit < 2) return;
    fn(2);
    if (limit < 3) return;

    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<std::uint64_t> base = primes_up_to(root);

    constexpr std::uint64_t kSegmentOdds = 1u << 21; // odd numbers per segment
    std::vector<std::uint64_t> bits(kSegmentOdds / 64 + 1);

    for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSegmentOdds) {
        const std::uint64_t hi = std::min(limit, lo + 2 * kSegmentOdds - 2);
        std::fill(bits.begin(), bits.end(), 0);
        for (std::uint64_t p : base) {
            if (p == 2) continue;
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            if (start % 2 == 0) start += p;
            for (std::uint64_t q = start; q <= hi; q += 2 * p) {
                std::uint64_t idx = (q - lo) / 2;
                bits[idx >> 6] |= (1ull << (idx & 63));
            }
        }
        for (std::uint64_t n = lo; n <= hi; n += 2) {
            std::uint64_t idx = (n - lo) / 2;
            if (!(bits[idx >> 6] & (1ull << (idx & 63)))) fn(n);
        }
    }
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// If n = p^k with p prime and k >= 1, returns {p, k}; otherwise nullopt.
inline std::optional<std::pair<std::uint64_t, int>> prime_power_decompose(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) { p = d; break; }
    }
    int k = 0;
    std::uint64_t m = n;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, k);
}

// von Mangoldt weight: log p at prime powers, 0 elsewhere.
inline double von_mangoldt(std::uint64_t n) {
    auto pp = prime_power_decompose(n);
    return pp ? std::log(static_cast<double>(pp->first)) : 0.0;
}

// All divisors of n (unsorted beyond the natural d <= sqrt(n) pairing).
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

} // namespace eflab
