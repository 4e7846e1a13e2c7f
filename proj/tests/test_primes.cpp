#include "doctest.h"

#include <set>

#include "aring/primes.hpp"

using namespace aring;

TEST_CASE("sieve basics") {
    CHECK(sieve(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve(2) == std::vector<std::uint64_t>{2});
    CHECK(sieve(1).empty());
    auto p100 = sieve(100);
    CHECK(p100.size() == 25);
    CHECK(p100.back() == 97);
}

TEST_CASE("sieve agrees with trial division up to 10^4") {
    auto ps = sieve(10000);
    std::set<std::uint64_t> prime_set(ps.begin(), ps.end());
    for (std::uint64_t n = 0; n <= 10000; ++n)
        CHECK(prime_set.count(n) == (is_prime_u64(n) ? 1u : 0u));
    CHECK(ps.size() == 1229);
}

TEST_CASE("prime windows") {
    PrimeWindow w(3, 20);
    CHECK(w.primes() == std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19});

    PrimeWindow w2(2, 50, {2});
    CHECK(*w2.begin() == 3);

    PrimeWindow empty(14, 16);
    CHECK(empty.primes().empty());
    CHECK(empty.begin() == empty.end());

    CHECK(w.contains(7));
    CHECK(!w.contains(2));
    CHECK(!w2.contains(2));
    CHECK_THROWS_AS(PrimeWindow(10, 5), std::invalid_argument);
}

TEST_CASE("window iteration matches contains() and is lazy-consistent") {
    PrimeWindow w(5, 300, {7, 97});
    std::vector<std::uint64_t> seen;
    for (std::uint64_t p : w) {
        CHECK(is_prime_u64(p));
        CHECK(w.contains(p));
        seen.push_back(p);
    }
    for (std::uint64_t n = 5; n <= 300; ++n)
        if (is_prime_u64(n) && n != 7 && n != 97)
            CHECK(std::find(seen.begin(), seen.end(), n) != seen.end());
}

TEST_CASE("next_prime_above") {
    CHECK(next_prime_above(2) == 3);
    CHECK(next_prime_above(3) == 5);
    CHECK(next_prime_above(8) == 11);
    CHECK(next_prime_above(1) == 2);
}
