#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "eflab/fourier_pair.hpp"
#include "eflab/selberg.hpp"

namespace eflab {

using CharacterTable = std::map<std::pair<std::uint32_t, std::uint32_t>, DirichletCharacter>;

// Datum grammar: `zeta` | `L:q.j` (character j mod q, from the loaded table
// or the built-ins) | aliases chi3, chi4, chi5, chi7, chi8 (the primitive
// quadratic character for that modulus), with `*` for products, e.g.
// "zeta*chi3".
inline SelbergDatum parse_datum(const std::string& spec, const CharacterTable* table = nullptr) {
    auto star = spec.find('*');
    if (star != std::string::npos)
        return make_product(parse_datum(spec.substr(0, star), table),
                            parse_datum(spec.substr(star + 1), table));

    if (spec == "zeta") return make_zeta();
    if (spec == "chi3") return make_dirichlet_l(builtin_character(3, 1));
    if (spec == "chi4") return make_dirichlet_l(builtin_character(4, 1));
    if (spec == "chi5") return make_dirichlet_l(builtin_character(5, 2));
    if (spec == "chi7") return make_dirichlet_l(builtin_character(7, 3));
    if (spec == "chi8") return make_dirichlet_l(builtin_character(8, 1));

    if (spec.rfind("L:", 0) == 0) {
        auto dot = spec.find('.', 2);
        if (dot == std::string::npos)
            throw std::invalid_argument("datum spec: expected L:q.index, got " + spec);
        std::uint32_t q = std::stoul(spec.substr(2, dot - 2));
        std::uint32_t j = std::stoul(spec.substr(dot + 1));
        if (table) {
            auto it = table->find({q, j});
            if (it != table->end()) return make_dirichlet_l(it->second);
        }
        return make_dirichlet_l(builtin_character(q, j));
    }
    throw std::invalid_argument("datum spec: unknown datum " + spec);
}

// Pair grammar: `sinc:w1,w2,...` | `ingham:N,alpha,M`.
inline FourierPair parse_pair(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("pair spec: expected family:params");
    std::string family = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    std::vector<double> vals;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    if (family == "sinc") return sinc_product_pair(vals);
    if (family == "ingham") {
        if (vals.size() != 3) throw std::invalid_argument("pair spec: ingham needs N,alpha,M");
        return ingham_pair(static_cast<int>(vals[0]), vals[1], static_cast<int>(vals[2]));
    }
    throw std::invalid_argument("pair spec: unknown family " + family);
}

// The built-in experiment pair catalog: equal/unequal degrees and pole orders.
inline std::vector<std::pair<std::string, std::string>> builtin_pair_catalog() {
    return {
        {"zeta", "chi3"},
        {"chi3", "chi4"},
        {"zeta", "zeta*chi3"},
        {"zeta*chi3", "zeta*chi4"},
    };
}

} // namespace eflab
