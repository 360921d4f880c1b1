#include <catch2/catch_amalgamated.hpp>

#include "eflab/gamma.hpp"
#include "eflab/hurwitz.hpp"

using namespace eflab;

namespace {

// Independent reference: plain truncated sum with a low-order tail repair,
// deliberately different truncation and correction depth from the library.
Complex hurwitz_reference(Complex s, double a, long N) {
    Complex sum = 0.0;
    for (long k = N - 1; k >= 0; --k) {
        double r = a + (double)k;
        sum += std::exp(-s * std::log(r));
    }
    double base = a + (double)N;
    Complex lb = std::log(base);
    sum += std::exp((1.0 - s) * lb) / (s - 1.0);
    sum += 0.5 * std::exp(-s * lb);
    sum += (1.0 / 12.0) * s * std::exp(-(s + 1.0) * lb);
    Complex p3 = s * (s + 1.0) * (s + 2.0);
    sum += (-1.0 / 720.0) * p3 * std::exp(-(s + 3.0) * lb);
    return sum;
}

} // namespace

TEST_CASE("hurwitz zeta at (2, 1) is pi^2/6") {
    // direct-summation oracle: sum to 10^6 plus integral tail
    double direct = 0.0;
    for (long k = 1000000; k >= 1; --k) direct += 1.0 / ((double)k * k);
    direct += 1.0 / 1000000.5; // midpoint tail of integral of x^-2
    CHECK(hurwitz_zeta(Complex(2.0, 0.0), 1.0).real() == Catch::Approx(direct).epsilon(1e-11));
    CHECK(hurwitz_zeta(Complex(2.0, 0.0), 1.0).real() ==
          Catch::Approx(detail::kPi * detail::kPi / 6.0).epsilon(1e-12));
}

TEST_CASE("split-the-sum identity at s = 3") {
    Complex lhs = hurwitz_zeta(Complex(3.0, 0.0), 0.5);
    Complex rhs = (std::pow(2.0, 3.0) - 1.0) * hurwitz_zeta(Complex(3.0, 0.0), 1.0);
    CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("hurwitz zeta on the critical line vs independent reference") {
    Complex s(0.5, 14.0);
    Complex ref = hurwitz_reference(s, 1.0 / 3.0, 40000);
    CHECK(std::abs(hurwitz_zeta(s, 1.0 / 3.0) - ref) < 1e-8);
}

TEST_CASE("hurwitz zeta higher on the critical line") {
    Complex s(0.5, 150.0);
    Complex ref = hurwitz_reference(s, 0.7, 60000);
    CHECK(std::abs(hurwitz_zeta(s, 0.7) - ref) < 1e-8);
}

TEST_CASE("pole at s = 1") {
    CHECK_THROWS_AS(hurwitz_zeta(Complex(1.0, 0.0), 0.5), PoleError);
    CHECK_THROWS_AS(hurwitz_zeta(Complex(1.0 + 1e-9, 0.0), 0.5), PoleError);
}

TEST_CASE("regularized value at s = 1 equals -digamma(a)") {
    for (double a : {0.25, 1.0 / 3.0, 1.0}) {
        Complex v = hurwitz_zeta_minus_pole(Complex(1.0, 0.0), a);
        CHECK(std::abs(v - (-digamma(Complex(a, 0.0)))) < 1e-10);
    }
}

TEST_CASE("conjugation symmetry") {
    Complex s(1.3, 9.0);
    CHECK(std::abs(hurwitz_zeta(std::conj(s), 0.4) - std::conj(hurwitz_zeta(s, 0.4))) < 1e-12);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(hurwitz_zeta(Complex(2.0, 0.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hurwitz_zeta(Complex(2.0, 0.0), 1.5), std::invalid_argument);
}
