#include <catch2/catch_amalgamated.hpp>

#include "eflab/primes.hpp"

using namespace eflab;

TEST_CASE("primes_up_to basic") {
    auto p = primes_up_to(30);
    CHECK(p == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
}

TEST_CASE("segmented sieve agrees with simple sieve") {
    auto ref = primes_up_to(200000);
    std::vector<std::uint64_t> got;
    for_each_prime(200000, [&](std::uint64_t p) { got.push_back(p); });
    CHECK(got == ref);
}

TEST_CASE("prime power decomposition") {
    auto pp = prime_power_decompose(8);
    REQUIRE(pp.has_value());
    CHECK(pp->first == 2);
    CHECK(pp->second == 3);
    CHECK(prime_power_decompose(1) == std::nullopt);
    CHECK(prime_power_decompose(6) == std::nullopt);
    CHECK(prime_power_decompose(12) == std::nullopt);
    CHECK(prime_power_decompose(9765625)->first == 5); // 5^10
}

TEST_CASE("von Mangoldt weight") {
    CHECK(von_mangoldt(8) == Catch::Approx(std::log(2.0)));
    CHECK(von_mangoldt(7) == Catch::Approx(std::log(7.0)));
    CHECK(von_mangoldt(10) == 0.0);
    CHECK(von_mangoldt(1) == 0.0);
}

TEST_CASE("divisors") {
    auto d = divisors(12);
    CHECK(d == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
}
