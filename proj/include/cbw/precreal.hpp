#pragma once

// Fixed-point reals with a tracked absolute error bound. A value is
// mantissa * 2^-bits together with err_ulps, a certified bound on
// |true - mantissa * 2^-bits| in units of 2^-bits. Every operation
// propagates the bound conservatively, so an enclosure can be read off at
// any point. Reference constants (pi, sqrt, zeta(3)) come from series that
// are independent of the identities this workbench checks: a Machin
// arctangent formula, integer square roots, and Euler-Maclaurin summation.

#include <string>

#include "cbw/bigint.hpp"

namespace cbw {

class PrecReal {
public:
    PrecReal() : mant_(0), bits_(0), err_(0) {}
    PrecReal(BigInt mantissa, long bits, BigInt err_ulps)
        : mant_(std::move(mantissa)), bits_(bits), err_(std::move(err_ulps)) {}

    static PrecReal from_rat(const BigRat& q, long bits);
    static PrecReal from_int(long v, long bits);
    // Enclosure mid +- err given as rationals.
    static PrecReal from_enclosure(const BigRat& mid, const BigRat& err, long bits);

    long bits() const { return bits_; }
    const BigInt& mantissa() const { return mant_; }
    const BigInt& err_ulps() const { return err_; }

    PrecReal operator+(const PrecReal& o) const;
    PrecReal operator-(const PrecReal& o) const;
    PrecReal operator*(const PrecReal& o) const;
    PrecReal operator/(const PrecReal& o) const;
    PrecReal operator-() const;
    PrecReal abs_value() const;
    PrecReal mul_small(long c) const;
    PrecReal div_small(long c) const; // c > 0

    BigRat lower() const;
    BigRat upper() const;
    BigRat midpoint() const;
    BigRat error_bound() const;

    // Certified upper bound on |*this - o|.
    BigRat abs_diff_upper(const PrecReal& o) const;
    // True when |*this| <= bound holds for every value in the enclosure.
    bool certainly_at_most(const BigRat& bound) const;

    // Midpoint rendered with `digits` fractional digits (display only).
    std::string to_decimal(int digits) const;

private:
    BigInt mant_;
    long bits_;
    BigInt err_;
};

long bits_for_digits(int digits);

PrecReal pr_sqrt(const PrecReal& x);
PrecReal sqrt_rat(const BigRat& q, long bits);
PrecReal pi_const(long bits);
PrecReal zeta3_const(long bits);

// Taylor evaluations; arguments stay in the regions used by the series
// checks (|theta| <= 2.2 for sin/cos, certified |z| < 1 for arcsin).
PrecReal pr_sin(const PrecReal& theta);
PrecReal pr_cos(const PrecReal& theta);
PrecReal pr_arcsin(const PrecReal& z);
PrecReal pr_arccos(const PrecReal& z);

} // namespace cbw
