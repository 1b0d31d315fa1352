#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbw/precreal.hpp"

using namespace cbw;

namespace {

// 40-digit references, used only to sanity-check leading digits.
const char* kPi = "3.1415926535897932384626433832795028841971";
const char* kSqrt3 = "1.7320508075688772935274463415058723669428";
const char* kZeta3 = "1.2020569031595942853997381615114499907649";

BigRat rat_pow10(int d) { return BigRat(pow_uu(10, static_cast<unsigned long>(d))); }

} // namespace

TEST_CASE("basic arithmetic enclosures") {
    long bits = bits_for_digits(40);
    PrecReal two = PrecReal::from_int(2, bits);
    PrecReal r = pr_sqrt(two);
    PrecReal sq = r * r;
    BigRat diff = sq.abs_diff_upper(two);
    CHECK(diff < BigRat(1) / rat_pow10(35));
    PrecReal third = PrecReal::from_rat(make_rat(1, 3), bits);
    PrecReal one = third + third + third;
    CHECK(one.abs_diff_upper(PrecReal::from_int(1, bits)) < BigRat(1) / rat_pow10(35));
    PrecReal quot = PrecReal::from_int(10, bits) / PrecReal::from_int(4, bits);
    CHECK(quot.midpoint() == make_rat(5, 2));
}

TEST_CASE("pi via Machin agrees with the reference digits") {
    long bits = bits_for_digits(45);
    PrecReal pi = pi_const(bits);
    CHECK(pi.error_bound() < BigRat(1) / rat_pow10(42));
    CHECK(pi.to_decimal(40).substr(0, 41) == std::string(kPi).substr(0, 41));
}

TEST_CASE("sqrt(3) via integer square root") {
    long bits = bits_for_digits(45);
    PrecReal s = sqrt_rat(BigRat(3), bits);
    CHECK(s.to_decimal(40).substr(0, 41) == std::string(kSqrt3).substr(0, 41));
}

TEST_CASE("zeta(3) via Euler-Maclaurin, cross-checked by a binomial series") {
    long bits = bits_for_digits(45);
    PrecReal z = zeta3_const(bits);
    CHECK(z.to_decimal(40).substr(0, 41) == std::string(kZeta3).substr(0, 41));

    // Independent oracle: zeta(3) = (5/2) sum_{n>=1} (-1)^(n-1) / (n^3 C(2n,n)),
    // geometric with ratio 1/4, tail below the first omitted term * 2.
    BigRat sum(0);
    BigInt central(2); // C(2,1)
    for (long n = 1; n <= 80; ++n) {
        BigRat term = make_rat(BigInt(1), BigInt(n) * BigInt(n) * BigInt(n) * central);
        sum += (n % 2 == 1) ? term : -term;
        central = central * BigInt(2 * (2 * n + 1));
        central /= BigInt(n + 1);
    }
    BigRat oracle = make_rat(5, 2) * sum;
    BigRat diff = z.midpoint() - oracle;
    if (diff < 0) diff = -diff;
    CHECK(diff < BigRat(1) / rat_pow10(40));
}

TEST_CASE("sin and cos Taylor with certified bounds") {
    long bits = bits_for_digits(40);
    PrecReal pi = pi_const(bits);
    PrecReal sin_pi_6 = pr_sin(pi.div_small(6));
    CHECK(sin_pi_6.abs_diff_upper(PrecReal::from_rat(make_rat(1, 2), bits)) <
          BigRat(1) / rat_pow10(35));
    PrecReal cos_pi_3 = pr_cos(pi.div_small(3));
    CHECK(cos_pi_3.abs_diff_upper(PrecReal::from_rat(make_rat(1, 2), bits)) <
          BigRat(1) / rat_pow10(35));
    // sin^2 + cos^2 = 1 at an arbitrary point.
    PrecReal x = PrecReal::from_rat(make_rat(7, 10), bits);
    PrecReal s = pr_sin(x), c = pr_cos(x);
    PrecReal unit = s * s + c * c;
    CHECK(unit.abs_diff_upper(PrecReal::from_int(1, bits)) < BigRat(1) / rat_pow10(34));
}

TEST_CASE("arcsin inverts sin") {
    long bits = bits_for_digits(40);
    PrecReal z = PrecReal::from_rat(make_rat(3, 5), bits);
    PrecReal theta = pr_arcsin(z);
    PrecReal back = pr_sin(theta);
    CHECK(back.abs_diff_upper(z) < BigRat(1) / rat_pow10(33));
    // arcsin(1/2) = pi/6.
    PrecReal half = PrecReal::from_rat(make_rat(1, 2), bits);
    CHECK(pr_arcsin(half).abs_diff_upper(pi_const(bits).div_small(6)) <
          BigRat(1) / rat_pow10(33));
}

TEST_CASE("arccos complements arcsin") {
    long bits = bits_for_digits(40);
    PrecReal z = PrecReal::from_rat(make_rat(12, 13), bits);
    PrecReal sum = pr_arcsin(z) + pr_arccos(z);
    CHECK(sum.abs_diff_upper(pi_const(bits).div_small(2)) < BigRat(1) / rat_pow10(33));
}

TEST_CASE("to_decimal renders negatives") {
    long bits = bits_for_digits(20);
    PrecReal v = PrecReal::from_rat(make_rat(-5, 4), bits);
    CHECK(v.to_decimal(3) == "-1.250");
}
