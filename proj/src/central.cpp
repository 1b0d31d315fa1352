#include "cbw/central.hpp"

#include <stdexcept>
#include <string>

#include "cbw/exact.hpp"
#include "cbw/floor_lemmas.hpp"

namespace cbw {

BigRat quotient_Q(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("quotient_Q: n >= 1 required");
    long long ln = static_cast<long long>(n);
    BigInt num = binomial(6 * ln, 3 * ln) * binomial(3 * ln, ln);
    BigInt den = BigInt(static_cast<long>(2 * ln + 1)) * binomial(2 * ln, ln);
    return make_rat(num, den);
}

BigRat ratio_1_2(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("ratio_1_2: nonnegative arguments required");
    if (k > n + 1) return BigRat(0); // C(2n-k+1, n) vanishes
    BigInt num = binomial(4 * n + 2 * k + 2, 2 * n + k + 1) *
                 binomial(2 * n + k + 1, 2 * k) * binomial(2 * n - k + 1, n);
    return make_rat(num, binomial(2 * k, k));
}

BigRat ratio_1_3(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("ratio_1_3: nonnegative arguments required");
    BigInt num = BigInt(static_cast<long>(2 * n + 1)) * binomial(2 * n, n) *
                 catalan(static_cast<std::uint64_t>(n + k)) * binomial(n + k + 1, 2 * k);
    return make_rat(num, binomial(2 * k, k));
}

namespace {

std::uint64_t integer_valuation(const BigInt& z, std::uint64_t p) {
    BigInt scratch;
    return mpz_remove(scratch.get_mpz_t(), z.get_mpz_t(), BigInt(static_cast<unsigned long>(p)).get_mpz_t());
}

} // namespace

ClaimReport verify_theorem_1_1(std::uint64_t n_max, std::uint64_t valuation_max, Exec mode) {
    ClaimReport rep{"thm1.1",
                    "1 <= n <= " + std::to_string(n_max) + " (valuations to " +
                        std::to_string(valuation_max) + ")",
                    {}};
    sweep_index(1, static_cast<long long>(n_max), mode,
                [valuation_max](long long n, std::vector<Finding>& out) {
        BigRat q = quotient_Q(static_cast<std::uint64_t>(n));
        if (!is_integer(q)) {
            out.push_back({"n=" + std::to_string(n), "Q=" + to_string(q) + " not an integer",
                           Severity::Violation});
            return;
        }
        BigInt z = q.get_num();
        if (mpz_odd_p(z.get_mpz_t())) {
            out.push_back({"n=" + std::to_string(n), "Q=" + to_string(z) + " odd",
                           Severity::Violation});
            return;
        }
        // Valuation route replays the floor-slack argument prime by prime.
        if (slack_sum_A(2, n) < 1)
            throw std::logic_error("verify_theorem_1_1: slack route lost evenness at n=" +
                                   std::to_string(n));
        if (static_cast<std::uint64_t>(n) <= valuation_max) {
            for (std::uint64_t p : cached_primes_upto(static_cast<std::uint64_t>(6 * n))) {
                long long via_slack = slack_sum_A(p, n);
                std::uint64_t direct = integer_valuation(z, p);
                if (via_slack < 0 || static_cast<std::uint64_t>(via_slack) != direct)
                    throw std::logic_error(
                        "verify_theorem_1_1: valuation routes disagree at n=" +
                        std::to_string(n) + " p=" + std::to_string(p));
            }
        }
    }, rep.counterexamples);
    return rep;
}

namespace {

// Shared sweep body for the two ratio families. slack_sum routes must agree
// with the reduced-denominator test pair by pair.
template <typename RatioFn, typename SlackSumFn>
void check_ratio_grid(const std::string& claim, long long n, std::uint64_t k_max,
                      long long max_arg_coeff_n, long long max_arg_coeff_k, long long max_arg_const,
                      RatioFn&& ratio, SlackSumFn&& slack_sum, std::vector<Finding>& out) {
    for (long long k = 0; k <= static_cast<long long>(k_max); ++k) {
        BigRat r = ratio(n, k);
        bool integral = is_integer(r);
        if (k <= n + 1) {
            bool slack_ok = true;
            long long max_arg = max_arg_coeff_n * n + max_arg_coeff_k * k + max_arg_const;
            for (std::uint64_t p : cached_primes_upto(static_cast<std::uint64_t>(max_arg))) {
                if (slack_sum(p, n, k) < 0) {
                    slack_ok = false;
                    break;
                }
            }
            if (slack_ok != integral)
                throw std::logic_error(claim + ": integrality oracles disagree at n=" +
                                       std::to_string(n) + " k=" + std::to_string(k));
        }
        if (!integral)
            out.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k),
                           "ratio=" + to_string(r),
                           n == 0 ? Severity::Finding : Severity::Violation});
    }
}

} // namespace

ClaimReport verify_1_2(std::uint64_t n_max, std::uint64_t k_max, Exec mode) {
    ClaimReport rep{"thm1.1-1.2",
                    "0 <= n <= " + std::to_string(n_max) + ", 0 <= k <= " + std::to_string(k_max),
                    {}};
    sweep_index(0, static_cast<long long>(n_max), mode,
                [k_max](long long n, std::vector<Finding>& out) {
        check_ratio_grid("thm1.1-1.2", n, k_max, 4, 2, 2, ratio_1_2,
                         [](std::uint64_t p, long long nn, long long kk) {
                             return slack_sum_C(p, nn, kk);
                         },
                         out);
    }, rep.counterexamples);
    return rep;
}

ClaimReport verify_1_3(std::uint64_t n_min, std::uint64_t n_max, std::uint64_t k_max, Exec mode) {
    ClaimReport rep{"thm1.1-1.3",
                    std::to_string(n_min) + " <= n <= " + std::to_string(n_max) +
                        ", 0 <= k <= " + std::to_string(k_max),
                    {}};
    sweep_index(static_cast<long long>(n_min), static_cast<long long>(n_max), mode,
                [k_max](long long n, std::vector<Finding>& out) {
        check_ratio_grid("thm1.1-1.3", n, k_max, 2, 2, 1, ratio_1_3,
                         [](std::uint64_t p, long long nn, long long kk) {
                             return slack_sum_D(p, nn, kk);
                         },
                         out);
    }, rep.counterexamples);
    return rep;
}

} // namespace cbw
