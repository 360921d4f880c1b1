#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eflab/gamma.hpp"

namespace eflab {

// A Dirichlet character mod q, stored as its value table on residues 0..q-1.
struct DirichletCharacter {
    std::uint32_t modulus = 1;
    std::vector<Complex> values; // values[r] = chi(r), 0 on non-coprime residues
    std::string label;

    Complex operator()(std::uint64_t n) const { return values[n % modulus]; }

    bool is_principal() const {
        for (std::uint32_t r = 0; r < modulus; ++r)
            if (std::gcd(r, modulus) == 1 && std::abs(values[r] - Complex(1.0)) > 1e-12)
                return false;
        return true;
    }

    // chi(-1) = +1 (even) or -1 (odd); returns 0 or 1 accordingly.
    int parity() const { return std::abs(values[modulus - 1] - Complex(1.0)) < 1e-9 ? 0 : 1; }

    bool has_real_values() const {
        for (const auto& v : values)
            if (std::abs(v.imag()) > 1e-12) return false;
        return true;
    }

    // chi is induced by a character mod d iff chi(n) = chi(m) whenever
    // n = m (mod d) and both are coprime to q. Primitive = no proper d works.
    bool is_primitive() const {
        if (modulus == 1) return true;
        for (std::uint32_t d = 1; d < modulus; ++d) {
            if (modulus % d != 0) continue;
            bool induced = true;
            for (std::uint32_t n = 0; n < modulus && induced; ++n) {
                if (std::gcd(n, modulus) != 1) continue;
                for (std::uint32_t m = n + d; m < modulus; m += d) {
                    if (std::gcd(m, modulus) != 1) continue;
                    if (std::abs(values[n] - values[m]) > 1e-9) { induced = false; break; }
                }
            }
            if (induced) return false;
        }
        return true;
    }
};

inline Complex gauss_sum(const DirichletCharacter& chi) {
    Complex tau = 0.0;
    const double q = chi.modulus;
    for (std::uint32_t r = 0; r < chi.modulus; ++r) {
        double ph = 2.0 * detail::kPi * r / q;
        tau += chi.values[r] * Complex(std::cos(ph), std::sin(ph));
    }
    return tau;
}

inline void validate_character(const DirichletCharacter& chi) {
    const std::uint32_t q = chi.modulus;
    if (q < 1 || chi.values.size() != q)
        throw std::invalid_argument("character: bad value table size");
    for (std::uint32_t r = 0; r < q; ++r) {
        bool coprime = std::gcd(r, q) == 1;
        double mag = std::abs(chi.values[r]);
        if (coprime ? std::abs(mag - 1.0) > 1e-9 : mag > 1e-12)
            throw std::invalid_argument("character: values must be unimodular on units, 0 elsewhere");
    }
    // complete multiplicativity on units
    for (std::uint32_t a = 0; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        for (std::uint32_t b = a; b < q; ++b) {
            if (std::gcd(b, q) != 1) continue;
            if (std::abs(chi.values[(a * b) % q] - chi.values[a] * chi.values[b]) > 1e-9)
                throw std::invalid_argument("character: not multiplicative");
        }
    }
}

namespace detail {

inline DirichletCharacter cyclic_character(std::uint32_t q, std::uint32_t gen, std::uint32_t order,
                                           std::uint32_t index) {
    DirichletCharacter chi;
    chi.modulus = q;
    chi.values.assign(q, Complex(0.0));
    std::uint64_t g = 1;
    for (std::uint32_t k = 0; k < order; ++k) {
        double ph = 2.0 * kPi * (static_cast<double>(index) * k) / order;
        Complex v(std::cos(ph), std::sin(ph));
        // snap exact rationals of pi to kill rounding fuzz in +-1, +-i tables
        if (std::abs(v.real()) < 1e-15) v = Complex(0.0, v.imag());
        if (std::abs(v.imag()) < 1e-15) v = Complex(v.real(), 0.0);
        chi.values[g % q] = v;
        g = (g * gen) % q;
    }
    chi.label = "chi_" + std::to_string(q) + "." + std::to_string(index);
    return chi;
}

} // namespace detail

// All characters mod q for the built-in moduli {1?, 3, 4, 5, 7, 8}, indexed so
// that index 0 is principal. For cyclic unit groups index j maps the fixed
// generator to e^{2 pi i j / phi(q)}. Mod 8 uses generators (7, 5) and index
// j = 2*j1 + j2 with chi(7) = (-1)^{j1}, chi(5) = (-1)^{j2}.
inline std::vector<DirichletCharacter> builtin_characters(std::uint32_t q) {
    std::vector<DirichletCharacter> out;
    auto cyc = [&](std::uint32_t gen, std::uint32_t order) {
        for (std::uint32_t j = 0; j < order; ++j) out.push_back(detail::cyclic_character(q, gen, order, j));
    };
    switch (q) {
        case 3: cyc(2, 2); break;
        case 4: cyc(3, 2); break;
        case 5: cyc(2, 4); break;
        case 7: cyc(3, 6); break;
        case 8: {
            for (std::uint32_t j1 = 0; j1 < 2; ++j1)
                for (std::uint32_t j2 = 0; j2 < 2; ++j2) {
                    DirichletCharacter chi;
                    chi.modulus = 8;
                    chi.values.assign(8, Complex(0.0));
                    // units: 1 = 7^0 5^0, 7 = 7, 5 = 5, 3 = 7*5 mod 8
                    chi.values[1] = 1.0;
                    chi.values[7] = j1 ? -1.0 : 1.0;
                    chi.values[5] = j2 ? -1.0 : 1.0;
                    chi.values[3] = chi.values[7] * chi.values[5];
                    chi.label = "chi_8." + std::to_string(2 * j1 + j2);
                    out.push_back(chi);
                }
            break;
        }
        default:
            throw std::invalid_argument("builtin_characters: modulus not built in (use a table file)");
    }
    for (const auto& chi : out) validate_character(chi);
    return out;
}

inline DirichletCharacter builtin_character(std::uint32_t q, std::uint32_t index) {
    auto all = builtin_characters(q);
    if (index >= all.size()) throw std::invalid_argument("builtin_character: index out of range");
    return all[index];
}

// Loads characters from a plain-text table: lines `q index residue re im`,
// '#' comments and blank lines ignored. Returns characters keyed (q, index).
inline std::map<std::pair<std::uint32_t, std::uint32_t>, DirichletCharacter>
load_character_table(std::istream& in) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, DirichletCharacter> table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::uint32_t q, index, residue;
        double re, im;
        if (!(ss >> q)) continue; // blank
        if (!(ss >> index >> residue >> re >> im))
            throw std::invalid_argument("character table: malformed line " + std::to_string(lineno));
        auto& chi = table[{q, index}];
        if (chi.values.empty()) {
            chi.modulus = q;
            chi.values.assign(q, Complex(0.0));
            chi.label = "chi_" + std::to_string(q) + "." + std::to_string(index);
        }
        if (residue >= q)
            throw std::invalid_argument("character table: residue out of range, line " + std::to_string(lineno));
        chi.values[residue] = Complex(re, im);
    }
    for (auto& [key, chi] : table) validate_character(chi);
    return table;
}

inline std::map<std::pair<std::uint32_t, std::uint32_t>, DirichletCharacter>
load_character_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("character table: cannot open " + path);
    return load_character_table(in);
}

} // namespace eflab
