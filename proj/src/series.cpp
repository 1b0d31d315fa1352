#include "cbw/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbw {

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<BigRat> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<BigRat> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return RatPoly();
    std::vector<BigRat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const BigRat& s) const {
    std::vector<BigRat> r(c_);
    for (auto& v : r) v *= s;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::compose_affine(const BigRat& a, const BigRat& b) const {
    // Horner over the affine argument.
    RatPoly acc;
    RatPoly arg = RatPoly::affine(b, a);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * arg + RatPoly::constant(c_[i]);
    }
    return acc;
}

BigRat RatPoly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

bool RatPoly::nonneg_from(const BigRat& from) const {
    RatPoly shifted = compose_affine(BigRat(1), from);
    for (const auto& v : shifted.c_)
        if (v < 0) return false;
    return true;
}

RatSeries RatSeries::truncated(std::size_t order) const {
    std::vector<BigRat> r(order);
    for (std::size_t i = 0; i < order && i < c_.size(); ++i) r[i] = c_[i];
    return RatSeries(std::move(r));
}

RatSeries RatSeries::operator+(const RatSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    std::vector<BigRat> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] + o.c_[i];
    return RatSeries(std::move(r));
}

RatSeries RatSeries::operator-(const RatSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    std::vector<BigRat> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] - o.c_[i];
    return RatSeries(std::move(r));
}

RatSeries RatSeries::operator*(const RatSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    std::vector<BigRat> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return RatSeries(std::move(r));
}

RatSeries RatSeries::scaled(const BigRat& s) const {
    std::vector<BigRat> r(c_);
    for (auto& v : r) v *= s;
    return RatSeries(std::move(r));
}

RatSeries RatSeries::shifted_up(std::size_t k) const {
    std::vector<BigRat> r(c_.size());
    for (std::size_t i = 0; i + k < c_.size(); ++i) r[i + k] = c_[i];
    return RatSeries(std::move(r));
}

RatSeries RatSeries::inverse() const {
    if (c_.empty() || c_[0] == 0)
        throw std::domain_error("RatSeries::inverse: constant term must be invertible");
    std::vector<BigRat> r(c_.size());
    r[0] = BigRat(1) / c_[0];
    for (std::size_t n = 1; n < c_.size(); ++n) {
        BigRat acc(0);
        for (std::size_t i = 1; i <= n; ++i)
            if (i < c_.size() && c_[i] != 0) acc += c_[i] * r[n - i];
        r[n] = -acc / c_[0];
    }
    return RatSeries(std::move(r));
}

} // namespace cbw
