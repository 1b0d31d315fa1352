#include "cbw/precreal.hpp"

#include <cmath>
#include <stdexcept>

#include "cbw/congruence.hpp"

namespace cbw {

namespace {

BigInt shift_left(const BigInt& z, long bits) {
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

BigInt floor_shift_right(const BigInt& z, long bits) {
    BigInt r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

BigInt ceil_shift_right(const BigInt& z, long bits) {
    BigInt r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt floor_div_z(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt abs_z(const BigInt& z) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

BigInt isqrt(const BigInt& z) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

// Smallest integer >= q, as BigInt.
BigInt rat_ceil(const BigRat& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

void require_same_scale(const PrecReal& a, const PrecReal& b) {
    if (a.bits() != b.bits())
        throw std::logic_error("PrecReal: operands carry different scales");
}

} // namespace

long bits_for_digits(int digits) {
    return static_cast<long>(std::ceil(digits * 3.3219281)) + 96;
}

PrecReal PrecReal::from_rat(const BigRat& q, long bits) {
    BigInt m = floor_div_z(shift_left(q.get_num(), bits), q.get_den());
    return PrecReal(std::move(m), bits, BigInt(1));
}

PrecReal PrecReal::from_int(long v, long bits) {
    return PrecReal(shift_left(BigInt(v), bits), bits, BigInt(0));
}

PrecReal PrecReal::from_enclosure(const BigRat& mid, const BigRat& err, long bits) {
    if (err < 0) throw std::invalid_argument("from_enclosure: negative error bound");
    BigInt m = floor_div_z(shift_left(mid.get_num(), bits), mid.get_den());
    BigInt e = rat_ceil(err * BigRat(shift_left(BigInt(1), bits))) + 1;
    return PrecReal(std::move(m), bits, std::move(e));
}

PrecReal PrecReal::operator+(const PrecReal& o) const {
    require_same_scale(*this, o);
    return PrecReal(mant_ + o.mant_, bits_, err_ + o.err_);
}

PrecReal PrecReal::operator-(const PrecReal& o) const {
    require_same_scale(*this, o);
    return PrecReal(mant_ - o.mant_, bits_, err_ + o.err_);
}

PrecReal PrecReal::operator*(const PrecReal& o) const {
    require_same_scale(*this, o);
    BigInt wide = mant_ * o.mant_;
    BigInt m = floor_shift_right(wide, bits_);
    BigInt err_wide = abs_z(mant_) * o.err_ + abs_z(o.mant_) * err_ + err_ * o.err_;
    BigInt e = ceil_shift_right(err_wide, bits_) + 2;
    return PrecReal(std::move(m), bits_, std::move(e));
}

PrecReal PrecReal::operator/(const PrecReal& o) const {
    require_same_scale(*this, o);
    BigInt ob = abs_z(o.mant_);
    if (ob <= o.err_)
        throw std::domain_error("PrecReal: division by an enclosure containing zero");
    BigInt m = floor_div_z(shift_left(mant_, bits_), o.mant_);
    BigInt num = shift_left(err_ * ob + abs_z(mant_) * o.err_, bits_);
    BigInt den = ob * (ob - o.err_);
    BigInt e = ceil_div(num, den) + 2;
    return PrecReal(std::move(m), bits_, std::move(e));
}

PrecReal PrecReal::operator-() const { return PrecReal(-mant_, bits_, err_); }

PrecReal PrecReal::abs_value() const { return PrecReal(abs_z(mant_), bits_, err_); }

PrecReal PrecReal::mul_small(long c) const {
    BigInt m = mant_ * BigInt(c);
    BigInt e = err_ * BigInt(std::labs(c));
    return PrecReal(std::move(m), bits_, std::move(e));
}

PrecReal PrecReal::div_small(long c) const {
    if (c <= 0) throw std::invalid_argument("div_small: positive divisor required");
    return PrecReal(floor_div_z(mant_, BigInt(c)), bits_, ceil_div(err_, BigInt(c)) + 1);
}

BigRat PrecReal::lower() const { return make_rat(mant_ - err_, shift_left(BigInt(1), bits_)); }
BigRat PrecReal::upper() const { return make_rat(mant_ + err_, shift_left(BigInt(1), bits_)); }
BigRat PrecReal::midpoint() const { return make_rat(mant_, shift_left(BigInt(1), bits_)); }
BigRat PrecReal::error_bound() const { return make_rat(err_, shift_left(BigInt(1), bits_)); }

BigRat PrecReal::abs_diff_upper(const PrecReal& o) const {
    require_same_scale(*this, o);
    return make_rat(abs_z(mant_ - o.mant_) + err_ + o.err_, shift_left(BigInt(1), bits_));
}

bool PrecReal::certainly_at_most(const BigRat& bound) const {
    return make_rat(abs_z(mant_) + err_, shift_left(BigInt(1), bits_)) <= bound;
}

std::string PrecReal::to_decimal(int digits) const {
    BigRat mid = midpoint();
    bool neg = mid < 0;
    if (neg) mid = -mid;
    BigInt scale = pow_uu(10, static_cast<unsigned long>(digits));
    BigRat scaled = mid * BigRat(scale);
    BigInt v = rat_floor(scaled);
    BigInt ip = v / scale;
    BigInt fp = v % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

PrecReal pr_sqrt(const PrecReal& x) {
    BigInt m = isqrt(shift_left(x.mantissa(), x.bits()));
    if (m == 0) throw std::domain_error("pr_sqrt: argument too close to zero");
    if (x.mantissa() < x.err_ulps())
        throw std::domain_error("pr_sqrt: enclosure not certainly nonnegative");
    // Propagated error e/(2 sqrt(x)) plus 1 ulp of isqrt truncation.
    BigInt e = ceil_div(shift_left(x.err_ulps(), x.bits()), m) + 2;
    return PrecReal(std::move(m), x.bits(), std::move(e));
}

PrecReal sqrt_rat(const BigRat& q, long bits) {
    if (q < 0) throw std::domain_error("sqrt_rat: negative argument");
    BigInt t = floor_div_z(shift_left(q.get_num(), 2 * bits), q.get_den());
    return PrecReal(isqrt(t), bits, BigInt(2));
}

namespace {

// arctan(1/x) as an exact rational partial sum; alternating, so the first
// omitted term bounds the tail.
BigRat machin_arctan_inv(unsigned long x, long bits, BigRat& tail_bound) {
    BigRat sum(0);
    BigRat xrat(static_cast<long>(x));
    BigRat xx = xrat * xrat;
    BigRat power = BigRat(1) / xrat;
    BigRat eps = make_rat(BigInt(1), shift_left(BigInt(1), bits + 8));
    unsigned long j = 0;
    for (;;) {
        BigRat term = power / BigRat(static_cast<long>(2 * j + 1));
        if (term < eps) {
            tail_bound = term;
            return sum;
        }
        sum += (j % 2 == 0) ? term : -term;
        power /= xx;
        ++j;
    }
}

} // namespace

PrecReal pi_const(long bits) {
    BigRat tail5(0), tail239(0);
    BigRat a5 = machin_arctan_inv(5, bits, tail5);
    BigRat a239 = machin_arctan_inv(239, bits, tail239);
    BigRat mid = BigRat(16) * a5 - BigRat(4) * a239;
    BigRat err = BigRat(16) * tail5 + BigRat(4) * tail239;
    return PrecReal::from_enclosure(mid, err, bits);
}

PrecReal zeta3_const(long bits) {
    // Euler-Maclaurin for sum 1/n^3 truncated at N:
    //   zeta(3) = sum_{n<N} n^-3 + 1/(2N^2) + 1/(2N^3)
    //           + sum_{k=1..K} B_{2k} (2k+1) / (2 N^{2k+2}) + R,
    // |R| <= |B_{2K+2}| (2K+3) / (2 N^{2K+4}).
    const unsigned long N = 64;
    BigRat sum(0);
    for (unsigned long n = 1; n < N; ++n)
        sum += make_rat(BigInt(1), BigInt(static_cast<long>(n)) * BigInt(static_cast<long>(n)) *
                                      BigInt(static_cast<long>(n)));
    BigRat N3 = BigRat(static_cast<long>(N)) * BigRat(static_cast<long>(N)) *
                BigRat(static_cast<long>(N));
    sum += make_rat(BigInt(1), BigInt(2) * BigInt(static_cast<long>(N)) * BigInt(static_cast<long>(N)));
    sum += BigRat(1) / (BigRat(2) * N3);
    BigRat eps = make_rat(BigInt(1), shift_left(BigInt(1), bits + 8));
    BigRat tail(0);
    for (unsigned long k = 1;; ++k) {
        BigRat correction = bernoulli_number(2 * k) * BigRat(static_cast<long>(2 * k + 1)) /
                            (BigRat(2) * BigRat(pow_uu(N, 2 * k + 2)));
        BigRat next_bound = bernoulli_number(2 * k + 2) * BigRat(static_cast<long>(2 * k + 3)) /
                            (BigRat(2) * BigRat(pow_uu(N, 2 * k + 4)));
        if (next_bound < 0) next_bound = -next_bound;
        sum += correction;
        if (next_bound < eps) {
            tail = next_bound;
            break;
        }
        if (k > 200) throw std::logic_error("zeta3_const: Euler-Maclaurin failed to converge");
    }
    return PrecReal::from_enclosure(sum, tail, bits);
}

namespace {

// Alternating Taylor loop shared by sin and cos. kind 0: sin, 1: cos.
PrecReal sin_cos_taylor(const PrecReal& theta, int kind) {
    const long bits = theta.bits();
    PrecReal theta2 = theta * theta;
    if (!theta2.certainly_at_most(BigRat(5)))
        throw std::domain_error("sin_cos_taylor: |theta| too large for the direct series");
    PrecReal term = (kind == 0) ? theta : PrecReal::from_int(1, bits);
    PrecReal sum = term;
    long j = 1;
    for (;;) {
        long d1 = (kind == 0) ? 2 * j : 2 * j - 1;
        long d2 = (kind == 0) ? 2 * j + 1 : 2 * j;
        term = (term * theta2).div_small(d1 * d2);
        if (j % 2 == 1)
            sum = sum - term;
        else
            sum = sum + term;
        // Stop once the mantissa is inside the accumulated noise floor; the
        // explicit tail bound below covers everything omitted.
        bool at_noise = abs_z(term.mantissa()) <= term.err_ulps() + 8;
        // Past d1*d2 > 18 with theta^2 <= 5 the term ratio stays below 1/2.
        if (at_noise && BigInt(d1) * BigInt(d2) > BigInt(3 * 6)) {
            PrecReal next = (term * theta2).div_small((d1 + 2) * (d2 + 2));
            BigInt tail = (abs_z(next.mantissa()) + next.err_ulps()) * 3 + 3;
            return PrecReal(sum.mantissa(), bits, sum.err_ulps() + tail);
        }
        if (j > 1000000) throw std::logic_error("sin_cos_taylor: no convergence");
        ++j;
    }
}

} // namespace

PrecReal pr_sin(const PrecReal& theta) { return sin_cos_taylor(theta, 0); }
PrecReal pr_cos(const PrecReal& theta) { return sin_cos_taylor(theta, 1); }

namespace {

// Upper bound on base^e for 0 < base < 1, via dyadic squaring with
// round-up at 128 fractional bits.
BigRat rat_pow_upper(const BigRat& base, unsigned long e) {
    const long gb = 128;
    BigInt m = ceil_div(shift_left(base.get_num(), gb), base.get_den());
    BigInt acc = shift_left(BigInt(1), gb);
    BigInt b = m;
    unsigned long n = e;
    while (n > 0) {
        if (n & 1) acc = ceil_shift_right(acc * b, gb) + 1;
        b = ceil_shift_right(b * b, gb) + 1;
        n >>= 1;
    }
    return make_rat(acc, shift_left(BigInt(1), gb));
}

} // namespace

PrecReal pr_arcsin(const PrecReal& z) {
    const long bits = z.bits();
    BigRat z_hi = make_rat(abs_z(z.mantissa()) + z.err_ulps(), shift_left(BigInt(1), bits));
    if (z_hi >= 1) throw std::domain_error("pr_arcsin: need certified |z| < 1");
    PrecReal z2 = z * z;
    PrecReal w = z; // C(2j,j)/4^j * z^(2j+1)
    PrecReal sum = z;
    long j = 0;
    for (;;) {
        if (abs_z(w.mantissa()) <= w.err_ulps() + 64 || j > 4000000) break;
        w = (w * z2).mul_small(2 * j + 1).div_small(2 * j + 2);
        PrecReal term = w.div_small(2 * j + 3);
        sum = sum + term;
        ++j;
    }
    // Tail: sum_{i>J} |z|^(2i+1)/(2i+1) <= z_hi^(2J+3) / ((2J+3)(1 - z_hi^2)).
    BigRat zp = rat_pow_upper(z_hi, static_cast<unsigned long>(2 * j + 3));
    BigRat tail = zp / (BigRat(static_cast<long>(2 * j + 3)) * (BigRat(1) - z_hi * z_hi));
    BigInt tail_ulps = rat_ceil(tail * BigRat(shift_left(BigInt(1), bits))) + 1;
    return PrecReal(sum.mantissa(), bits, sum.err_ulps() + tail_ulps);
}

PrecReal pr_arccos(const PrecReal& z) {
    PrecReal half_pi = pi_const(z.bits()).div_small(2);
    return half_pi - pr_arcsin(z);
}

} // namespace cbw
