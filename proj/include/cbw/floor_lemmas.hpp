#pragma once

// The three floor-function inequalities behind the divisibility results.
// Each slack function is left-hand side minus right-hand side of its
// inequality; the slack is >= 0 everywhere except one exceptional residue
// class (even m with k = n+1 = m/2 mod m) where it is exactly -1.

#include <cstdint>

#include "cbw/bigint.hpp"
#include "cbw/report.hpp"
#include "cbw/sweep.hpp"

namespace cbw {

struct LemmaOutcome {
    long long value;
    bool exceptional;
};

// m * frac(x / m); for integer x this is x mod m in [0, m).
BigRat frac_part_m(const BigRat& x, unsigned long m);

// floor(n/m) + floor(6n/m) - floor(2n/m) - floor((2n+1)/m) - floor(3n/m),
// m >= 2. Depends only on n mod m.
long long floor_slack_A(long long m, long long n);

// floor((4n+2k+2)/m) - floor((2n+k+1)/m) + 2 floor(k/m) - 2 floor(2k/m)
//   - floor(n/m) - floor((n-k+1)/m), m >= 1.
LemmaOutcome floor_slack_C(long long m, long long n, long long k);

// floor((2n+2k)/m) - floor((n+k)/m) + 2 floor(k/m) - 2 floor(2k/m)
//   - 2 floor(n/m) + floor((2n+1)/m) - floor((n-k+1)/m), m >= 1.
LemmaOutcome floor_slack_D(long long m, long long n, long long k);

// sum_{i>=1} slack(p^i, ...); all terms vanish once p^i exceeds the largest
// floor numerator, so the sums are finite.
long long slack_sum_A(std::uint64_t p, long long n);
long long slack_sum_C(std::uint64_t p, long long n, long long k);
long long slack_sum_D(std::uint64_t p, long long n, long long k);

// Exhaustive residue verification. The sweeps check nonnegativity away from
// the exceptional class and value == -1 exactly on it.
ClaimReport verify_theorem_2_1(long long m_max, Exec mode = Exec::Parallel);
ClaimReport verify_theorem_2_2(long long m_max, Exec mode = Exec::Parallel);
ClaimReport verify_theorem_2_3(long long m_max, Exec mode = Exec::Parallel);

} // namespace cbw
