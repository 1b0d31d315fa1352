#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cbw/exact.hpp"
#include "cbw/floor_lemmas.hpp"

using namespace cbw;

TEST_CASE("frac_part_m") {
    CHECK(frac_part_m(BigRat(7), 4) == BigRat(3));
    CHECK(frac_part_m(BigRat(-1), 4) == BigRat(3));
    CHECK(frac_part_m(make_rat(5, 2), 2) == make_rat(1, 2));
    CHECK(frac_part_m(BigRat(0), 9) == 0);
}

TEST_CASE("floor_slack_A spot values") {
    CHECK(floor_slack_A(2, 1) == 0); // 0+3-1-1-1
    for (long long m : {2, 3, 5, 17, 100}) CHECK(floor_slack_A(m, 0) == 0);
    CHECK(floor_slack_A(5, 3) == 0);
}

TEST_CASE("floor_slack_C spot values") {
    auto o = floor_slack_C(2, 0, 1); // 2-1+0-2-0-0
    CHECK(o.value == -1);
    CHECK(o.exceptional);
    for (long long m : {3, 4, 7, 50}) {
        auto z = floor_slack_C(m, 0, 0);
        CHECK(z.value == 0);
        CHECK_FALSE(z.exceptional);
    }
    auto p = floor_slack_C(3, 4, 2);
    CHECK(p.value >= 0);
    CHECK_FALSE(p.exceptional);
}

TEST_CASE("floor_slack_D spot values") {
    auto o = floor_slack_D(2, 0, 1); // 1-0+0-2-0+0-0
    CHECK(o.value == -1);
    CHECK(o.exceptional);
    auto q = floor_slack_D(4, 1, 2); // k = n+1 = 2 = m/2 (mod 4)
    CHECK(q.value == -1);
    CHECK(q.exceptional);
    for (long long m : {1, 2, 3, 9}) CHECK(floor_slack_D(m, 0, 0).value >= 0);
}

TEST_CASE("slack values depend only on residues") {
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<long long> big(-1000000, 1000000);
    for (int iter = 0; iter < 4000; ++iter) {
        long long m = 1 + static_cast<long long>(rng() % 50);
        long long n = big(rng), k = big(rng);
        if (m >= 2) REQUIRE(floor_slack_A(m, n) == floor_slack_A(m, floor_mod(n, m)));
        auto c1 = floor_slack_C(m, n, k);
        auto c2 = floor_slack_C(m, floor_mod(n, m), floor_mod(k, m));
        REQUIRE(c1.value == c2.value);
        REQUIRE(c1.exceptional == c2.exceptional);
        auto d1 = floor_slack_D(m, n, k);
        auto d2 = floor_slack_D(m, floor_mod(n, m), floor_mod(k, m));
        REQUIRE(d1.value == d2.value);
        REQUIRE(d1.exceptional == d2.exceptional);
    }
}

TEST_CASE("slack_sum_A reproduces the factorial valuation difference") {
    // sum_i A(p^i, n) = nu_p(n! (6n)!) - nu_p((2n)! (2n+1)! (3n)!)
    for (long long n = 1; n <= 400; n += (n < 60 ? 1 : 17)) {
        for (std::uint64_t p : cached_primes_upto(static_cast<std::uint64_t>(6 * n))) {
            long long direct =
                static_cast<long long>(factorial_valuation(n, p) + factorial_valuation(6 * n, p)) -
                static_cast<long long>(factorial_valuation(2 * n, p) +
                                       factorial_valuation(2 * n + 1, p) +
                                       factorial_valuation(3 * n, p));
            REQUIRE(slack_sum_A(p, n) == direct);
        }
    }
}

TEST_CASE("residue sweeps pass exhaustively") {
    CHECK(verify_theorem_2_1(64, Exec::Serial).pass());
    CHECK(verify_theorem_2_1(200, Exec::Parallel).pass());
    CHECK(verify_theorem_2_2(64, Exec::Serial).pass());
    CHECK(verify_theorem_2_2(100, Exec::Parallel).pass());
    CHECK(verify_theorem_2_3(64, Exec::Serial).pass());
    CHECK(verify_theorem_2_3(100, Exec::Parallel).pass());
}

TEST_CASE("negative slack occurs exactly on the exceptional class") {
    for (long long m = 1; m <= 100; ++m) {
        for (long long n = 0; n < m; ++n) {
            for (long long k = 0; k < m; ++k) {
                auto c = floor_slack_C(m, n, k);
                auto d = floor_slack_D(m, n, k);
                if (c.value < 0) {
                    REQUIRE(c.exceptional);
                    REQUIRE(c.value == -1);
                }
                if (c.exceptional) REQUIRE(c.value == -1);
                if (d.value < 0) {
                    REQUIRE(d.exceptional);
                    REQUIRE(d.value == -1);
                }
                if (d.exceptional) REQUIRE(d.value == -1);
            }
        }
    }
}

TEST_CASE("exceptional set at m=2 is exactly the odd-k even-n class") {
    for (long long n = 0; n < 2; ++n)
        for (long long k = 0; k < 2; ++k) {
            bool expect = (k == 1 && n == 0); // k = n+1 = 1 (mod 2)
            CHECK(floor_slack_C(2, n, k).exceptional == expect);
            CHECK(floor_slack_D(2, n, k).exceptional == expect);
        }
}
