#include <catch2/catch_amalgamated.hpp>

#include "eflab/catalog.hpp"
#include "eflab/lfunction.hpp"

using namespace eflab;

TEST_CASE("zeta values") {
    auto z = make_zeta();
    CHECK(l_value(z, Complex(2.0, 0.0)).real() ==
          Catch::Approx(detail::kPi * detail::kPi / 6.0).epsilon(1e-12));
    CHECK_THROWS_AS(l_value(z, Complex(1.0, 0.0)), PoleError);
}

TEST_CASE("dirichlet L spot values") {
    auto L3 = parse_datum("chi3");
    // closed form for the odd quadratic character mod 3 at s = 1
    CHECK(l_value(L3, Complex(1.0, 0.0)).real() ==
          Catch::Approx(detail::kPi / std::pow(3.0, 1.5)).epsilon(1e-10));

    // partial-sum oracle at s = 3
    double direct = 0.0;
    for (long n = 100000; n >= 1; --n) {
        int r = n % 3;
        if (r == 0) continue;
        direct += (r == 1 ? 1.0 : -1.0) / ((double)n * n * n);
    }
    CHECK(l_value(L3, Complex(3.0, 0.0)).real() == Catch::Approx(direct).epsilon(1e-9));
}

TEST_CASE("product values multiply") {
    auto z = make_zeta();
    auto L3 = parse_datum("chi3");
    auto P = make_product(z, L3);
    Complex s(2.0, 1.0);
    Complex lhs = l_value(P, s);
    Complex rhs = l_value(z, s) * l_value(L3, s);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
}

TEST_CASE("coefficients-only datum has no evaluator") {
    SelbergDatum d = make_zeta();
    d.kind = SelbergDatum::Kind::coefficients_only;
    CHECK_THROWS_AS(l_value(d, Complex(2.0, 0.0)), std::invalid_argument);
}

TEST_CASE("conjugation symmetry of evaluators for real data") {
    auto z = make_zeta();
    auto L3 = parse_datum("chi3");
    for (Complex s : {Complex(1.7, 5.0), Complex(0.5, 21.3)}) {
        CHECK(std::abs(l_value(z, std::conj(s)) - std::conj(l_value(z, s))) <
              1e-12 * (1.0 + std::abs(l_value(z, s))));
        CHECK(std::abs(l_value(L3, std::conj(s)) - std::conj(l_value(L3, s))) <
              1e-12 * (1.0 + std::abs(l_value(L3, s))));
    }
}

TEST_CASE("completed function and functional equation") {
    auto z = make_zeta();
    CHECK(functional_equation_residual(z, Complex(2.0, 3.0)) < 1e-8);

    // Phi(1/2 + 10i) is real for zeta (omega = 1, real coefficients)
    Complex phi = completed_phi(z, Complex(0.5, 10.0));
    CHECK(std::abs(phi.imag()) < 1e-10 * std::abs(phi));

    // smoke value: finite nonzero away from poles
    auto L3 = parse_datum("chi3");
    Complex v = completed_phi(L3, Complex(3.0, 0.0));
    CHECK(std::abs(v) > 0.0);
    CHECK(std::isfinite(v.real()));

    CHECK_THROWS_AS(completed_phi(z, Complex(1.0, 0.0)), PoleError);
    CHECK_THROWS_AS(completed_phi(z, Complex(0.0, 0.0)), PoleError);

    // self-dual point: s = 1 - conj(s) at s = 1/2
    CHECK(functional_equation_residual(z, Complex(0.5, 0.0)) < 1e-12);
}

TEST_CASE("functional-equation gate on the fixed grid, all builtin data") {
    std::vector<Complex> grid;
    for (int k = 0; k < 20; ++k)
        grid.emplace_back(0.3 + 0.12 * k, -9.0 + 1.1 * k); // fixed 20-point grid
    for (const char* spec : {"zeta", "chi3", "chi4", "zeta*chi3"}) {
        auto F = parse_datum(spec);
        for (Complex s : grid) {
            CAPTURE(spec, s.real(), s.imag());
            REQUIRE(functional_equation_residual(F, s) < 1e-6);
        }
    }
}
