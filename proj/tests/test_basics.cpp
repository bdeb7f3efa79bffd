#include "formsum/basics.hpp"

#include <doctest.h>

#include <numeric>

using namespace formsum;

TEST_CASE("primes_below") {
    CHECK(primes_below(2).empty());
    CHECK(primes_below(3) == std::vector<int64_t>{2});
    CHECK(primes_below(30) == std::vector<int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_below(100).size() == 25);
}

TEST_CASE("is_prime") {
    CHECK(!is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(!is_prime(561));   // Carmichael
    CHECK(is_prime(1000003));
    CHECK(is_prime(2147483647));
    // agrees with trial division exhaustively
    auto ps = primes_below(2000);
    size_t idx = 0;
    for (int64_t n = 2; n < 2000; ++n) {
        bool p = idx < ps.size() && ps[idx] == n;
        CHECK(is_prime(n) == p);
        if (p) ++idx;
    }
}

TEST_CASE("factorize") {
    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0].p == 2);
    CHECK(f[0].exp == 3);
    CHECK(f[1].p == 3);
    CHECK(f[1].exp == 2);
    CHECK(f[2].p == 5);
    CHECK(f[2].exp == 1);
    CHECK(factorize(1).empty());
    CHECK(factorize(97).size() == 1);
    // reconstruction property
    for (int64_t n = 1; n <= 5000; ++n) {
        int64_t prod = 1;
        for (auto [p, e] : factorize(n)) prod *= ipow(p, e);
        CHECK(prod == n);
    }
    CHECK_THROWS_AS(factorize((1000003LL) * 1000033LL, 1000), UnfactoredError);
}

TEST_CASE("modular arithmetic") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(3, 0, 7) == 1);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(1, 2) == 1);
    CHECK_THROWS_AS(mod_inverse(6, 9), Error);
    for (int64_t m : {5LL, 7LL, 12LL, 101LL})
        for (int64_t a = 1; a < m; ++a)
            if (std::gcd(a, m) == 1) CHECK(a * mod_inverse(a, m) % m == 1);
}

TEST_CASE("ipow and tau") {
    CHECK(ipow(2, 10) == 1024);
    CHECK(ipow(7, 0) == 1);
    CHECK_THROWS_AS(ipow(10, 19), Error);
    CHECK(tau(1) == 1);
    CHECK(tau(12) == 6);
    CHECK(tau(-12) == 6);
    CHECK(tau(97) == 2);
}

TEST_CASE("P+ and P- conventions") {
    CHECK(p_plus(1) == 1);
    CHECK(p_minus(1) == std::numeric_limits<int64_t>::max());
    CHECK(p_plus(12) == 3);
    CHECK(p_minus(12) == 2);
    CHECK(p_plus(97) == 97);
}

TEST_CASE("KahanSum") {
    KahanSum s;
    for (int i = 0; i < 10000000; ++i) s.add(0.1);
    CHECK(s.value() == doctest::Approx(1000000.0).epsilon(1e-12));
}

TEST_CASE("to_i64 range check") {
    CHECK(to_i64(Int(-5)) == -5);
    Int big = Int(1) << 100;
    CHECK_THROWS_AS(to_i64(big), Error);
}
