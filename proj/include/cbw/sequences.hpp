#pragma once

// The three integer sequences: S_n from the central-binomial quotient,
// T_n from the even part of the algebraic generating function, and a_n
// from the alternating C(2k,k)^5 sum. Each generator carries its own
// cross-oracle: S against the quotient integrality, T against the odd
// (S) coefficients of the series solver, a against its recurrence.

#include <cstdint>
#include <string>
#include <vector>

#include "cbw/bigint.hpp"
#include "cbw/precreal.hpp"
#include "cbw/report.hpp"
#include "cbw/series.hpp"
#include "cbw/sweep.hpp"

namespace cbw {

struct SequenceTable {
    std::string name;            // "S", "T" or "a"
    std::vector<BigInt> terms;   // terms[i] is term i+1
    std::string method;          // formula | recurrence | series-oracle
};

// Q(n)/2; throws std::logic_error if Q(n) is not an even integer (that
// would contradict a proven statement).
BigInt S_term(std::uint64_t n);

// S_1..S_count.
SequenceTable S_sequence(std::uint64_t count, Exec mode = Exec::Parallel);

// Closed form of a_n: (1 / (8 n^2 C(2n,n)^2)) *
//   sum_{k=0}^{n-1} (205k^2+160k+32) (-1)^(n-1-k) C(2k,k)^5.
BigRat a_term_closed(std::uint64_t n);

// a_1..a_count via 4(2n+1)^2 a_{n+1} + n^2 a_n = (205n^2+160n+32) C(2n-1,n)^3
// from a_1 = 1. Every term is checked against the closed form (mismatch
// throws). Non-integral or non-positive values are conjecture findings.
SequenceTable a_sequence_recurrence(std::uint64_t count,
                                    std::vector<Finding>* findings = nullptr);

// The power-series root y(x) of 6912 y^3 - 36 y + 1 - 216 x^2 with
// y(0) = 1/24 and positive linear coefficient, to `order` coefficients.
// The cubic comes from the triple-angle reduction of the closed form
// cos((2/3) arccos(6 sqrt(3) x)) / 12; substituting the root back must
// leave a residual that vanishes to the truncation order.
RatSeries cubic_series_solve(std::size_t order);

struct TSequenceResult {
    SequenceTable table;            // T_1..T_count
    std::vector<Finding> findings;  // positivity / integrality violations
};

// T_k = -[x^{2k}] y. Fatal if the odd coefficients fail to reproduce S_k
// (that would be a solver bug); conjectural properties are findings.
TSequenceResult T_sequence(std::uint64_t count);

// Parity (S_n odd iff n is a power of two, n <= parity_max) and
// 3 S_n = 0 (mod 2n+3) for n <= mod_max.
ClaimReport check_conjecture_1_1_i(std::uint64_t parity_max, std::uint64_t mod_max,
                                   Exec mode = Exec::Parallel);

// S_n * 8n * sqrt(n pi) / 108^n at the given precision.
PrecReal stirling_ratio(std::uint64_t n, int digits);

// One line per term: "<index><SPACE><value><LF>", indices from 1.
void export_bfile(const SequenceTable& table, const std::string& path);

// Tab-separated variant with the same row order.
void export_tsv(const SequenceTable& table, const std::string& path);

} // namespace cbw
