#pragma once

// Modular arithmetic over prime powers plus the number caches used by the
// supercongruence checks: exact Bernoulli and Euler numbers, harmonic sums,
// and the Legendre symbol. Congruence checkers compute their left-hand
// sides by two routes (exact integer then reduce, fully modular) and abort
// on disagreement.

#include <cstdint>

#include "cbw/bigint.hpp"
#include "cbw/report.hpp"
#include "cbw/sweep.hpp"

namespace cbw {

struct PrimePowerRing {
    std::uint64_t p;
    unsigned exponent;
    BigInt modulus;

    PrimePowerRing(std::uint64_t prime, unsigned e);

    BigInt reduce(const BigInt& z) const;
    // num * den^-1 mod p^e; throws std::domain_error when p divides den.
    BigInt reduce_rat(const BigRat& q) const;
    BigInt inv(const BigInt& z) const;
};

// Exact B_index with the B_1 = -1/2 convention. Cached.
BigRat bernoulli_number(std::size_t index);

// Exact E_index (secant numbers); odd indices are 0. Cached.
BigInt euler_number(std::size_t index);

BigInt bernoulli_mod(std::size_t index, const PrimePowerRing& ring);

// H_{p-1} = sum_{k=1}^{p-1} 1/k reduced into the ring.
BigInt harmonic_mod(std::uint64_t p, const PrimePowerRing& ring);

// Euler criterion, mapped to {-1, 0, 1}; p must be an odd prime.
int legendre_symbol(const BigInt& a, std::uint64_t p);

// S_p = 15 - 30p + 60p^2 (mod p^3) for odd primes p <= p_max. Violations are
// fatal: this congruence is a proven statement.
ClaimReport check_S_p_congruence(std::uint64_t p_max, Exec mode = Exec::Parallel);

// sum_{k=1}^{p-1} S_k / 108^k mod p is 0 for p = +-1 (mod 12) and -1 for
// p = +-5 (mod 12), for primes 3 < p <= p_max.
ClaimReport check_conjecture_1_1_ii(std::uint64_t p_max, Exec mode = Exec::Parallel);

// T_p = -2 (mod p) for primes p <= p_max.
ClaimReport check_conjecture_1_2_Tp(std::uint64_t p_max);

// The two alternating C(2k,k)^5 supercongruences (mod p^6 for p != 3,
// mod p^7 for p != 5).
ClaimReport check_conjecture_1_3_ii(std::uint64_t p_max, Exec mode = Exec::Parallel);

// The C(2k,k)^4 C(3k,k) / (-64)^k supercongruences (mod p^6 and the
// half-range mod p^5 with the Euler-number term).
ClaimReport check_conjecture_1_4_i(std::uint64_t p_max, Exec mode = Exec::Parallel);

} // namespace cbw
