#include "cbw/exact.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace cbw {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return primes;
}

namespace {

std::mutex g_prime_mutex;
std::shared_ptr<const std::vector<std::uint64_t>> g_primes;
std::uint64_t g_prime_limit = 0;

std::shared_ptr<const std::vector<std::uint64_t>> prime_snapshot(std::uint64_t limit) {
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    if (!g_primes || g_prime_limit < limit) {
        std::uint64_t grow = std::max<std::uint64_t>(limit, std::max<std::uint64_t>(2 * g_prime_limit, 1 << 14));
        g_primes = std::make_shared<const std::vector<std::uint64_t>>(sieve_primes(grow));
        g_prime_limit = grow;
    }
    return g_primes;
}

// Keeps the most recent snapshot alive per thread so spans stay valid.
thread_local std::shared_ptr<const std::vector<std::uint64_t>> t_prime_ref;

} // namespace

std::span<const std::uint64_t> cached_primes_upto(std::uint64_t limit) {
    t_prime_ref = prime_snapshot(limit);
    const auto& v = *t_prime_ref;
    auto end = std::upper_bound(v.begin(), v.end(), limit);
    return {v.data(), static_cast<std::size_t>(end - v.begin())};
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t factorial_valuation(std::uint64_t m, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("factorial_valuation: p must be prime");
    std::uint64_t total = 0;
    for (std::uint64_t q = p; q <= m; ) {
        total += m / q;
        if (q > m / p) break; // next power would overflow past m anyway
        q *= p;
    }
    return total;
}

std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    if (k > n) throw std::invalid_argument("binomial_valuation: k > n");
    return factorial_valuation(n, p) - factorial_valuation(k, p) - factorial_valuation(n - k, p);
}

BigInt PrimeFactorization::reconstruct() const {
    // Balanced product keeps intermediate sizes flat.
    std::vector<BigInt> parts;
    parts.reserve(factors.size());
    for (const auto& [p, e] : factors) parts.push_back(pow_uu(p, e));
    if (parts.empty()) return BigInt(1);
    while (parts.size() > 1) {
        std::vector<BigInt> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] * parts[i + 1]);
        if (parts.size() % 2) next.push_back(parts.back());
        parts = std::move(next);
    }
    return parts[0];
}

PrimeFactorization factorize_binomial(std::uint64_t n, std::uint64_t k,
                                      std::span<const std::uint64_t> primes) {
    if (k > n) throw std::invalid_argument("factorize_binomial: k > n");
    if (n >= 2 && (primes.empty() || primes.back() < n)) {
        // A prime in (n/2, n] could carry exponent 1 and be missed.
        if (primes.empty() || primes.back() * 2 < n || !std::is_sorted(primes.begin(), primes.end()))
            throw std::invalid_argument("factorize_binomial: prime list does not cover n");
        for (std::uint64_t q = primes.back() + 1; q <= n; ++q)
            if (is_prime(q)) throw std::invalid_argument("factorize_binomial: prime list does not cover n");
    }
    PrimeFactorization f;
    for (std::uint64_t p : primes) {
        if (p > n) break;
        std::uint64_t e = binomial_valuation(n, k, p);
        if (e > 0) f.factors.emplace_back(p, e);
    }
    return f;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return BigInt(0);
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t uk = static_cast<std::uint64_t>(k);
    if (un < 2) return BigInt(1);
    auto primes = cached_primes_upto(un);
    return factorize_binomial(un, uk, primes).reconstruct();
}

BigInt catalan(std::uint64_t n) {
    BigInt central = binomial(static_cast<long long>(2 * n), static_cast<long long>(n));
    BigInt c = central / BigInt(n + 1);
    if (c * BigInt(n + 1) != central)
        throw std::logic_error("catalan: (n+1) does not divide C(2n,n)");
    BigInt alt = central - binomial(static_cast<long long>(2 * n), static_cast<long long>(n + 1));
    if (c != alt) throw std::logic_error("catalan: the two defining forms disagree");
    return c;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: argument not invertible");
    return r;
}

} // namespace cbw
