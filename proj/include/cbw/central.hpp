#pragma once

// Divisibility of binomial products by central binomial coefficients:
// the quotient Q(n) = C(6n,3n)C(3n,n) / ((2n+1)C(2n,n)) and the two
// families of ratios whose integrality is under test. Integrality is
// always decided twice, by reduced-rational arithmetic and by floor-slack
// valuation sums; a disagreement aborts the sweep.

#include <cstdint>

#include "cbw/bigint.hpp"
#include "cbw/report.hpp"
#include "cbw/sweep.hpp"

namespace cbw {

// C(6n,3n) C(3n,n) / ((2n+1) C(2n,n)) = n!(6n)! / ((2n)!(2n+1)!(3n)!), n >= 1.
BigRat quotient_Q(std::uint64_t n);

// C(4n+2k+2, 2n+k+1) C(2n+k+1, 2k) C(2n-k+1, n) / C(2k,k); 0 for k > n+1.
BigRat ratio_1_2(long long n, long long k);

// (2n+1) C(2n,n) C_{n+k} C(n+k+1, 2k) / C(2k,k); 0 for k > n+1.
BigRat ratio_1_3(long long n, long long k);

// Q(n) is an even integer for 1 <= n <= n_max. For n <= valuation_max the
// exponent of every prime in Q is additionally recomputed from the integer
// itself and compared against the slack sums.
ClaimReport verify_theorem_1_1(std::uint64_t n_max, std::uint64_t valuation_max,
                               Exec mode = Exec::Parallel);

ClaimReport verify_1_2(std::uint64_t n_max, std::uint64_t k_max, Exec mode = Exec::Parallel);

// Sweeps n in [n_min, n_max]; rows found at n = 0 are reported as findings
// (the stated hypothesis is ambiguous there), rows at n >= 1 as violations.
ClaimReport verify_1_3(std::uint64_t n_min, std::uint64_t n_max, std::uint64_t k_max,
                       Exec mode = Exec::Parallel);

} // namespace cbw
