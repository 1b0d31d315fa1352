#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "cbw/exact.hpp"

using namespace cbw;

namespace {

// Independent oracle: exponent of p in z by trial division.
std::uint64_t trial_division_valuation(BigInt z, std::uint64_t p) {
    std::uint64_t e = 0;
    BigInt bp(static_cast<unsigned long>(p));
    while (z != 0 && mpz_divisible_p(z.get_mpz_t(), bp.get_mpz_t())) {
        z /= bp;
        ++e;
    }
    return e;
}

// Independent oracle: carries when adding k and n-k in base p (Kummer).
std::uint64_t carry_count(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    std::uint64_t a = k, b = n - k, carries = 0, carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        std::uint64_t s = a % p + b % p + carry;
        carry = s >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
        if (a == 0 && b == 0 && carry == 0) break;
    }
    return carries;
}

BigInt gmp_binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

TEST_CASE("sieve_primes small values") {
    CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
    CHECK(sieve_primes(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(sieve_primes(1).empty());
    CHECK(sieve_primes(0).empty());
}

TEST_CASE("cached prime table covers requested limits") {
    auto p1 = cached_primes_upto(100);
    CHECK(p1.size() == 25);
    auto p2 = cached_primes_upto(30000);
    CHECK(p2.back() >= 29989);
    CHECK(cached_primes_upto(10).size() == 4);
}

TEST_CASE("factorial_valuation") {
    CHECK(factorial_valuation(10, 2) == 8); // 5 + 2 + 1
    CHECK(factorial_valuation(0, 7) == 0);
    CHECK(factorial_valuation(6, 3) == 2);
    CHECK(factorial_valuation(100, 97) == 1);
    CHECK_THROWS_AS(factorial_valuation(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(factorial_valuation(10, 1), std::invalid_argument);
}

TEST_CASE("binomial spot values and out-of-range convention") {
    CHECK(binomial(2, 1) == 2);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 0) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(12000, 6000) == gmp_binomial(12000, 6000));
}

TEST_CASE("binomial agrees with GMP for all n <= 120") {
    for (long long n = 0; n <= 120; ++n)
        for (long long k = 0; k <= n; ++k)
            REQUIRE(binomial(n, k) == gmp_binomial(static_cast<unsigned long>(n),
                                                   static_cast<unsigned long>(k)));
}

TEST_CASE("Pascal recurrence for n <= 100") {
    for (long long n = 1; n <= 100; ++n)
        for (long long k = 1; k <= n; ++k)
            REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial_valuation spot values") {
    CHECK(binomial_valuation(4, 2, 2) == 1);  // C(4,2)=6
    CHECK(binomial_valuation(6, 3, 2) == 2);  // C(6,3)=20=2^2*5
    CHECK(binomial_valuation(5, 2, 3) == 0);  // C(5,2)=10
    CHECK_THROWS_AS(binomial_valuation(3, 5, 2), std::invalid_argument);
}

TEST_CASE("central binomial coefficients are even") {
    for (std::uint64_t n = 1; n <= 500; ++n)
        REQUIRE(binomial_valuation(2 * n, n, 2) >= 1);
}

TEST_CASE("Legendre valuation equals trial division and Kummer carries") {
    for (std::uint64_t n = 0; n <= 200; n += (n < 40 ? 1 : 7)) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            BigInt b = binomial(static_cast<long long>(n), static_cast<long long>(k));
            for (std::uint64_t p : cached_primes_upto(n == 0 ? 2 : n)) {
                if (p > n) break;
                std::uint64_t e = binomial_valuation(n, k, p);
                REQUIRE(e == trial_division_valuation(b, p));
                REQUIRE(e == carry_count(n, k, p));
            }
        }
    }
}

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(5) == 42);
    for (std::uint64_t n = 0; n <= 500; ++n)
        REQUIRE(catalan(n) * BigInt(n + 1) == binomial(static_cast<long long>(2 * n),
                                                       static_cast<long long>(n)));
}

TEST_CASE("factorize_binomial") {
    auto primes = cached_primes_upto(400);
    auto f = factorize_binomial(6, 3, primes);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<std::uint64_t, std::uint64_t>{2, 2});
    CHECK(f.factors[1] == std::pair<std::uint64_t, std::uint64_t>{5, 1});

    auto g = factorize_binomial(4, 2, primes);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == std::pair<std::uint64_t, std::uint64_t>{2, 1});
    CHECK(g.factors[1] == std::pair<std::uint64_t, std::uint64_t>{3, 1});

    CHECK(factorize_binomial(1, 0, primes).factors.empty());

    auto small = cached_primes_upto(7);
    CHECK_THROWS_AS(factorize_binomial(100, 50, small), std::invalid_argument);
}

TEST_CASE("factorize_binomial reconstruction matches binomial for n <= 300") {
    auto primes = cached_primes_upto(300);
    for (std::uint64_t n = 2; n <= 300; ++n)
        for (std::uint64_t k = 0; k <= n; k += (n < 60 ? 1 : 11))
            REQUIRE(factorize_binomial(n, k, primes).reconstruct() ==
                    binomial(static_cast<long long>(n), static_cast<long long>(k)));
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(BigInt(3), BigInt(7)) == 5);
    CHECK(mod_inverse(BigInt(108), BigInt(5)) == 2); // 108 = 3 mod 5, 3*2 = 1
    CHECK_THROWS_AS(mod_inverse(BigInt(2), BigInt(4)), std::domain_error);
    BigInt m = pow_uu(97, 6);
    BigInt inv = mod_inverse(BigInt(-64), m);
    BigInt prod = (BigInt(-64) * inv) % m;
    if (prod < 0) prod += m;
    CHECK(prod == 1);
    CHECK(inv > 0);
    CHECK(inv < m);
}
