#include "cbw/floor_lemmas.hpp"

#include <stdexcept>
#include <string>

namespace cbw {

BigRat frac_part_m(const BigRat& x, unsigned long m) {
    if (m < 1) throw std::invalid_argument("frac_part_m: m >= 1 required");
    BigRat xm = x / BigRat(static_cast<long>(m));
    BigRat frac = xm - BigRat(rat_floor(xm));
    return frac * BigRat(static_cast<long>(m));
}

namespace {

// The exceptional class: 2 | m and k = n + 1 = m/2 (mod m).
bool exceptional_class(long long m, long long n, long long k) {
    if (m % 2 != 0) return false;
    long long half = m / 2;
    return floor_mod(k, m) == half && floor_mod(n + 1, m) == half;
}

} // namespace

long long floor_slack_A(long long m, long long n) {
    if (m < 2) throw std::invalid_argument("floor_slack_A: m >= 2 required");
    return floor_div(n, m) + floor_div(6 * n, m) - floor_div(2 * n, m) -
           floor_div(2 * n + 1, m) - floor_div(3 * n, m);
}

LemmaOutcome floor_slack_C(long long m, long long n, long long k) {
    if (m < 1) throw std::invalid_argument("floor_slack_C: m >= 1 required");
    long long v = floor_div(4 * n + 2 * k + 2, m) - floor_div(2 * n + k + 1, m) +
                  2 * floor_div(k, m) - 2 * floor_div(2 * k, m) -
                  floor_div(n, m) - floor_div(n - k + 1, m);
    return {v, exceptional_class(m, n, k)};
}

LemmaOutcome floor_slack_D(long long m, long long n, long long k) {
    if (m < 1) throw std::invalid_argument("floor_slack_D: m >= 1 required");
    long long v = floor_div(2 * n + 2 * k, m) - floor_div(n + k, m) +
                  2 * floor_div(k, m) - 2 * floor_div(2 * k, m) -
                  2 * floor_div(n, m) + floor_div(2 * n + 1, m) -
                  floor_div(n - k + 1, m);
    return {v, exceptional_class(m, n, k)};
}

long long slack_sum_A(std::uint64_t p, long long n) {
    long long total = 0;
    long long bound = 6 * n + 2; // every floor argument is below this
    for (long long q = static_cast<long long>(p); ; q *= static_cast<long long>(p)) {
        if (q >= 2) total += floor_slack_A(q, n);
        if (q > bound / static_cast<long long>(p)) break;
    }
    return total;
}

long long slack_sum_C(std::uint64_t p, long long n, long long k) {
    long long total = 0;
    long long bound = 4 * n + 2 * k + 3;
    for (long long q = static_cast<long long>(p); ; q *= static_cast<long long>(p)) {
        total += floor_slack_C(q, n, k).value;
        if (q > bound / static_cast<long long>(p)) break;
    }
    return total;
}

long long slack_sum_D(std::uint64_t p, long long n, long long k) {
    long long total = 0;
    long long bound = 2 * n + 2 * k + 2;
    if (bound < 2 * n + 2) bound = 2 * n + 2;
    for (long long q = static_cast<long long>(p); ; q *= static_cast<long long>(p)) {
        total += floor_slack_D(q, n, k).value;
        if (q > bound / static_cast<long long>(p)) break;
    }
    return total;
}

ClaimReport verify_theorem_2_1(long long m_max, Exec mode) {
    ClaimReport rep{"ineq2.1", "2 <= m <= " + std::to_string(m_max) + ", residues n", {}};
    sweep_index(2, m_max, mode, [](long long m, std::vector<Finding>& out) {
        for (long long n = 0; n < m; ++n) {
            long long v = floor_slack_A(m, n);
            if (v < 0)
                out.push_back({"m=" + std::to_string(m) + " n=" + std::to_string(n),
                               "slack=" + std::to_string(v), Severity::Violation});
        }
    }, rep.counterexamples);
    return rep;
}

namespace {

template <typename SlackFn>
ClaimReport verify_residue_grid(const std::string& claim, long long m_max, Exec mode,
                                SlackFn&& slack) {
    ClaimReport rep{claim, "1 <= m <= " + std::to_string(m_max) + ", residues n,k", {}};
    sweep_index(1, m_max, mode, [&slack](long long m, std::vector<Finding>& out) {
        for (long long n = 0; n < m; ++n) {
            for (long long k = 0; k < m; ++k) {
                LemmaOutcome o = slack(m, n, k);
                bool ok = o.exceptional ? (o.value == -1) : (o.value >= 0);
                if (!ok)
                    out.push_back({"m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                       " k=" + std::to_string(k),
                                   "slack=" + std::to_string(o.value) +
                                       (o.exceptional ? " exceptional" : ""),
                                   Severity::Violation});
            }
        }
    }, rep.counterexamples);
    return rep;
}

} // namespace

ClaimReport verify_theorem_2_2(long long m_max, Exec mode) {
    return verify_residue_grid("ineq2.2", m_max, mode, floor_slack_C);
}

ClaimReport verify_theorem_2_3(long long m_max, Exec mode) {
    return verify_residue_grid("ineq2.3", m_max, mode, floor_slack_D);
}

} // namespace cbw
