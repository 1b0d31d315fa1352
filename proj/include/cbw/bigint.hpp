#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace cbw {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Reduced fraction with positive denominator.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat make_rat(long num, long den) {
    return make_rat(BigInt(num), BigInt(den));
}

inline bool is_integer(const BigRat& q) {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

// Floor of a rational (round toward -inf).
inline BigInt rat_floor(const BigRat& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Mathematical mod: result in [0, b) for b > 0.
inline long long floor_mod(long long a, long long b) {
    return a - b * floor_div(a, b);
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt pow_uu(unsigned long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// 4^e for possibly negative e.
inline BigRat pow4(long long e) {
    if (e >= 0) return BigRat(pow_uu(4, static_cast<unsigned long>(e)));
    return make_rat(BigInt(1), pow_uu(4, static_cast<unsigned long>(-e)));
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRat& q) { return q.get_str(); }

} // namespace cbw
