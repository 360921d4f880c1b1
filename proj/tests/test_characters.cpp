#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "eflab/characters.hpp"
#include "eflab/lfunction.hpp"

using namespace eflab;

TEST_CASE("builtin character tables") {
    auto chi3 = builtin_character(3, 1);
    CHECK(chi3(1) == Complex(1.0));
    CHECK(chi3(2) == Complex(-1.0));
    CHECK(chi3(3) == Complex(0.0));
    CHECK(chi3.parity() == 1);
    CHECK(chi3.is_primitive());
    CHECK_FALSE(chi3.is_principal());

    auto princ = builtin_character(3, 0);
    CHECK(princ.is_principal());
    CHECK_FALSE(princ.is_primitive()); // induced by the modulus-1 character

    auto chi4 = builtin_character(4, 1);
    CHECK(chi4(3) == Complex(-1.0));
    CHECK(chi4.parity() == 1);

    auto chi5 = builtin_character(5, 2); // quadratic
    CHECK(chi5(2) == Complex(-1.0));
    CHECK(chi5(4) == Complex(1.0));
    CHECK(chi5.parity() == 0);
    CHECK(chi5.has_real_values());

    auto chi5c = builtin_character(5, 1); // order 4, complex
    CHECK_FALSE(chi5c.has_real_values());
    CHECK(chi5c.is_primitive());

    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u}) {
        auto all = builtin_characters(q);
        for (std::uint32_t j = 1; j < all.size(); ++j) {
            if (q == 8 && j == 2) continue; // chi_8.2 is induced mod 4
            CHECK(all[j].is_primitive());
        }
    }
    CHECK_FALSE(builtin_character(8, 2).is_primitive());
}

TEST_CASE("gauss sums of primitive characters have modulus sqrt(q)") {
    for (auto [q, j] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {4, 1}, {5, 1}, {5, 2}, {7, 3}, {8, 1}}) {
        auto chi = builtin_character(q, j);
        CHECK(std::abs(gauss_sum(chi)) == Catch::Approx(std::sqrt((double)q)).epsilon(1e-12));
    }
}

TEST_CASE("character table file loading") {
    std::stringstream table;
    table << "# quadratic character mod 3\n";
    table << "3 1 0 0 0\n";
    table << "3 1 1 1 0\n";
    table << "3 1 2 -1 0\n";
    auto loaded = load_character_table(table);
    REQUIRE(loaded.count({3, 1}) == 1);
    auto chi = loaded.at({3, 1});
    auto ref = builtin_character(3, 1);
    for (unsigned r = 0; r < 3; ++r) CHECK(std::abs(chi.values[r] - ref.values[r]) < 1e-12);

    std::stringstream bad;
    bad << "3 1 0 oops 0\n";
    CHECK_THROWS_AS(load_character_table(bad), std::invalid_argument);

    std::stringstream notmult;
    notmult << "3 0 1 1 0\n3 0 2 0.5 0\n";
    CHECK_THROWS_AS(load_character_table(notmult), std::invalid_argument);
}

TEST_CASE("character table loads from an actual file") {
    std::string path = "chartable_test.txt";
    {
        std::ofstream out(path);
        out << "# odd quadratic character mod 7\n";
        auto chi7 = builtin_character(7, 3);
        for (unsigned r = 0; r < 7; ++r)
            out << "7 3 " << r << " " << chi7.values[r].real() << " " << chi7.values[r].imag() << "\n";
    }
    auto table = load_character_table_file(path);
    REQUIRE(table.count({7, 3}) == 1);
    CHECK(table.at({7, 3}).is_primitive());
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_character_table_file("no_such_table.txt"), std::invalid_argument);
}

TEST_CASE("computed root numbers satisfy the functional equation, all builtin moduli") {
    // includes a complex (order-4) character: exercises the Gauss-sum omega
    for (auto [q, j] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {4, 1}, {5, 1}, {5, 2}, {7, 3}, {8, 1}, {8, 3}}) {
        auto F = make_dirichlet_l(builtin_character(q, j));
        CHECK(std::abs(std::abs(F.omega) - 1.0) < 1e-12);
        CHECK(functional_equation_residual(F, Complex(1.5, 2.0)) < 1e-8);
    }
}
