#pragma once

// Exact combinatorial arithmetic: primes, Legendre valuations, binomial
// coefficients built from their prime factorization, Catalan numbers and
// modular inverses. Everything here is pure and exact; large binomials are
// assembled as products of prime powers instead of factorial quotients.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cbw/bigint.hpp"

namespace cbw {

// Primes <= limit, ascending. limit < 2 gives an empty list.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

// Shared grow-on-demand prime table (snapshot copy is cheap to share).
// Thread safe; sweeps hitting the same bound reuse one sieve run.
std::span<const std::uint64_t> cached_primes_upto(std::uint64_t limit);

bool is_prime(std::uint64_t n);

// nu_p(m!) = sum_{i>=1} floor(m / p^i). Throws std::invalid_argument if p
// is not prime.
std::uint64_t factorial_valuation(std::uint64_t m, std::uint64_t p);

// Exact exponent of p in C(n, k) as a difference of factorial valuations.
// Requires k <= n; throws otherwise. Equals the number of carries when
// adding k and n-k in base p.
std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p);

struct PrimeFactorization {
    // prime -> exponent, primes ascending, exponents >= 1.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
    BigInt reconstruct() const;
};

// Factorization of C(n, k); primes must cover everything <= n.
PrimeFactorization factorize_binomial(std::uint64_t n, std::uint64_t k,
                                      std::span<const std::uint64_t> primes);

// C(n, k), with the out-of-range convention: 0 whenever k < 0 or k > n
// (so also 0 for any negative n).
BigInt binomial(long long n, long long k);

// C(2n, n) / (n + 1); asserts agreement with C(2n,n) - C(2n,n+1).
BigInt catalan(std::uint64_t n);

// b with a*b == 1 (mod m), 0 < b < m. Throws std::domain_error when
// gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

} // namespace cbw
