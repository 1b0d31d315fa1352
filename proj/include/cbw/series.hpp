#pragma once

// Exact dense polynomials and truncated power series over the rationals.
// Small and schoolbook on purpose: orders stay in the hundreds.

#include <cstddef>
#include <vector>

#include "cbw/bigint.hpp"

namespace cbw {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> c) : c_(std::move(c)) { trim(); }
    static RatPoly constant(const BigRat& v) { return RatPoly({v}); }
    // b + a*x
    static RatPoly affine(const BigRat& b, const BigRat& a) { return RatPoly({b, a}); }

    bool zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<BigRat>& coeffs() const { return c_; }
    BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const BigRat& s) const;

    // p(a*x + b)
    RatPoly compose_affine(const BigRat& a, const BigRat& b) const;
    BigRat eval(const BigRat& x) const;

    // True if p(x) >= 0 for every real x >= from, certified by shifting to
    // x = from + s and checking that all coefficients are nonnegative.
    // Sufficient, not necessary.
    bool nonneg_from(const BigRat& from) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigRat> c_;
};

// Truncated power series: exactly `order` coefficients, indices [0, order).
class RatSeries {
public:
    explicit RatSeries(std::size_t order) : c_(order) {}
    RatSeries(std::vector<BigRat> c) : c_(std::move(c)) {}

    std::size_t order() const { return c_.size(); }
    const BigRat& operator[](std::size_t i) const { return c_[i]; }
    BigRat& at(std::size_t i) { return c_[i]; }

    RatSeries truncated(std::size_t order) const;
    RatSeries operator+(const RatSeries& o) const;
    RatSeries operator-(const RatSeries& o) const;
    RatSeries operator*(const RatSeries& o) const;
    RatSeries scaled(const BigRat& s) const;
    // Multiply by x^k (shifts coefficients up, drops overflow).
    RatSeries shifted_up(std::size_t k) const;
    // Requires an invertible constant term.
    RatSeries inverse() const;

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

private:
    std::vector<BigRat> c_;
};

} // namespace cbw
