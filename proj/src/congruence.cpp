#include "cbw/congruence.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "cbw/exact.hpp"
#include "cbw/sequences.hpp"

namespace cbw {

PrimePowerRing::PrimePowerRing(std::uint64_t prime, unsigned e) : p(prime), exponent(e) {
    if (!is_prime(prime)) throw std::invalid_argument("PrimePowerRing: p must be prime");
    if (e < 1) throw std::invalid_argument("PrimePowerRing: exponent >= 1 required");
    modulus = pow_uu(prime, e);
}

BigInt PrimePowerRing::reduce(const BigInt& z) const {
    BigInt r = z % modulus;
    if (r < 0) r += modulus;
    return r;
}

BigInt PrimePowerRing::reduce_rat(const BigRat& q) const {
    if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("PrimePowerRing::reduce: denominator divisible by p");
    return reduce(q.get_num() * mod_inverse(q.get_den(), modulus));
}

BigInt PrimePowerRing::inv(const BigInt& z) const { return mod_inverse(z, modulus); }

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRat> g_bernoulli; // B_0, B_1, ...

std::mutex g_euler_mutex;
std::vector<BigInt> g_euler; // E_0, E_1, ...

} // namespace

BigRat bernoulli_number(std::size_t index) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.push_back(BigRat(1));
    while (g_bernoulli.size() <= index) {
        std::size_t m = g_bernoulli.size();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        BigRat acc(0);
        for (std::size_t j = 0; j < m; ++j)
            acc += BigRat(binomial(static_cast<long long>(m + 1), static_cast<long long>(j))) *
                   g_bernoulli[j];
        g_bernoulli.push_back(-acc / BigRat(static_cast<long>(m + 1)));
    }
    return g_bernoulli[index];
}

BigInt euler_number(std::size_t index) {
    if (index % 2 == 1) return BigInt(0);
    std::lock_guard<std::mutex> lock(g_euler_mutex);
    if (g_euler.empty()) g_euler.push_back(BigInt(1));
    while (g_euler.size() <= index / 2) {
        std::size_t n = g_euler.size();
        // sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0
        BigInt acc(0);
        for (std::size_t k = 0; k < n; ++k)
            acc += binomial(static_cast<long long>(2 * n), static_cast<long long>(2 * k)) *
                   g_euler[k];
        g_euler.push_back(-acc);
    }
    return g_euler[index / 2];
}

BigInt bernoulli_mod(std::size_t index, const PrimePowerRing& ring) {
    return ring.reduce_rat(bernoulli_number(index));
}

BigInt harmonic_mod(std::uint64_t p, const PrimePowerRing& ring) {
    if (ring.p != p) throw std::invalid_argument("harmonic_mod: ring prime mismatch");
    BigRat h(0);
    for (std::uint64_t k = 1; k < p; ++k) h += make_rat(BigInt(1), BigInt(static_cast<long>(k)));
    return ring.reduce_rat(h);
}

int legendre_symbol(const BigInt& a, std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre_symbol: odd prime required");
    BigInt mod(static_cast<unsigned long>(p));
    BigInt e((static_cast<unsigned long>(p) - 1) / 2);
    BigInt r;
    BigInt base = a % mod;
    if (base < 0) base += mod;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == mod - 1) return -1;
    throw std::logic_error("legendre_symbol: Euler criterion produced an unexpected residue");
}

namespace {

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t p_max) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p : cached_primes_upto(p_max))
        if (p >= 3) ps.push_back(p);
    return ps;
}

} // namespace

ClaimReport check_S_p_congruence(std::uint64_t p_max, Exec mode) {
    ClaimReport rep{"sp-mod-p3", "odd primes p <= " + std::to_string(p_max), {}};
    auto primes = odd_primes_upto(p_max);
    sweep_index(0, static_cast<long long>(primes.size()) - 1, mode,
                [&primes](long long i, std::vector<Finding>& out) {
        std::uint64_t p = primes[static_cast<std::size_t>(i)];
        PrimePowerRing ring(p, 3);
        BigInt lhs = ring.reduce(S_term(p));
        long lp = static_cast<long>(p);
        BigInt rhs = ring.reduce(BigInt(15) - BigInt(30 * lp) + BigInt(60 * lp) * BigInt(lp));
        if (lhs != rhs)
            out.push_back({"p=" + std::to_string(p),
                           "S_p=" + lhs.get_str() + " expected=" + rhs.get_str() + " (mod p^3)",
                           Severity::Violation});
    }, rep.counterexamples);
    return rep;
}

ClaimReport check_conjecture_1_1_ii(std::uint64_t p_max, Exec mode) {
    ClaimReport rep{"conj1.1ii", "primes 3 < p <= " + std::to_string(p_max), {}};
    if (p_max < 5) return rep;
    // S_1..S_{p_max-1} shared across the prime sweep.
    SequenceTable s = S_sequence(p_max - 1, mode);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : odd_primes_upto(p_max))
        if (p > 3) primes.push_back(p);
    sweep_index(0, static_cast<long long>(primes.size()) - 1, mode,
                [&primes, &s](long long i, std::vector<Finding>& out) {
        std::uint64_t p = primes[static_cast<std::size_t>(i)];
        BigInt mod(static_cast<unsigned long>(p));
        BigInt inv108 = mod_inverse(BigInt(108), mod);
        BigInt acc(0), power(1);
        for (std::uint64_t k = 1; k < p; ++k) {
            power = (power * inv108) % mod;
            acc = (acc + s.terms[k - 1] * power) % mod;
        }
        std::uint64_t residue12 = p % 12;
        BigInt expected = (residue12 == 1 || residue12 == 11) ? BigInt(0) : mod - 1;
        if (acc != expected)
            out.push_back({"p=" + std::to_string(p),
                           "sum=" + acc.get_str() + " expected=" + expected.get_str() +
                               " (p%12=" + std::to_string(residue12) + ")",
                           Severity::Finding});
    }, rep.counterexamples);
    return rep;
}

ClaimReport check_conjecture_1_2_Tp(std::uint64_t p_max) {
    ClaimReport rep{"conj1.2", "primes p <= " + std::to_string(p_max), {}};
    if (p_max < 2) return rep;
    TSequenceResult t = T_sequence(p_max);
    for (auto& f : t.findings) rep.counterexamples.push_back(f);
    for (std::uint64_t p : cached_primes_upto(p_max)) {
        BigInt mod(static_cast<unsigned long>(p));
        BigInt r = (t.table.terms[p - 1] + 2) % mod;
        if (r < 0) r += mod;
        if (r != 0)
            rep.counterexamples.push_back({"p=" + std::to_string(p),
                                           "T_p+2=" + r.get_str() + " (mod p), expected 0",
                                           Severity::Finding});
    }
    return rep;
}

namespace {

BigInt pow5(const BigInt& z) {
    BigInt s = z * z;
    return s * s * z;
}

} // namespace

ClaimReport check_conjecture_1_3_ii(std::uint64_t p_max, Exec mode) {
    ClaimReport rep{"conj1.3ii", "odd primes p <= " + std::to_string(p_max), {}};
    auto primes = odd_primes_upto(p_max);
    sweep_index(0, static_cast<long long>(primes.size()) - 1, mode,
                [&primes](long long i, std::vector<Finding>& out) {
        std::uint64_t p = primes[static_cast<std::size_t>(i)];
        long lp = static_cast<long>(p);
        BigInt p2 = BigInt(lp) * BigInt(lp);

        auto weighted_sum = [](std::uint64_t upper, const PrimePowerRing& ring) {
            // Exact route and fully modular route must agree.
            BigInt exact(0);
            BigInt modular(0);
            for (std::uint64_t k = 0; k <= upper; ++k) {
                long lk = static_cast<long>(k);
                BigInt weight = BigInt(205 * lk) * BigInt(lk) + BigInt(160 * lk) + BigInt(32);
                BigInt central = binomial(static_cast<long long>(2 * k), static_cast<long long>(k));
                BigInt term = weight * pow5(central);
                if (k % 2 == 1) term = -term;
                exact += term;
                BigInt mterm = (ring.reduce(weight) * ring.reduce(pow5(ring.reduce(central)))) %
                               ring.modulus;
                if (k % 2 == 1) mterm = -mterm;
                modular = ring.reduce(modular + mterm);
            }
            if (ring.reduce(exact) != modular)
                throw std::logic_error("conj1.3ii: the two reduction routes disagree");
            return modular;
        };

        if (p != 3) {
            PrimePowerRing ring(p, 6);
            BigInt lhs = weighted_sum((p - 1) / 2, ring);
            BigInt rhs = ring.reduce(BigInt(32) * p2 +
                                     ring.reduce_rat(make_rat(BigInt(896), BigInt(3))) *
                                         pow_uu(p, 5) % ring.modulus *
                                         bernoulli_mod(p - 3, ring));
            if (lhs != rhs)
                out.push_back({"p=" + std::to_string(p) + " (mod p^6)",
                               "lhs=" + lhs.get_str() + " rhs=" + rhs.get_str(),
                               Severity::Finding});
        }
        if (p != 5) {
            PrimePowerRing ring(p, 7);
            BigInt lhs = weighted_sum(p - 1, ring);
            BigInt rhs = ring.reduce(BigInt(32) * p2 +
                                     BigInt(64) * pow_uu(p, 3) * harmonic_mod(p, ring));
            if (lhs != rhs)
                out.push_back({"p=" + std::to_string(p) + " (mod p^7)",
                               "lhs=" + lhs.get_str() + " rhs=" + rhs.get_str(),
                               Severity::Finding});
        }
    }, rep.counterexamples);
    return rep;
}

ClaimReport check_conjecture_1_4_i(std::uint64_t p_max, Exec mode) {
    ClaimReport rep{"conj1.4i", "odd primes p <= " + std::to_string(p_max), {}};
    auto primes = odd_primes_upto(p_max);
    sweep_index(0, static_cast<long long>(primes.size()) - 1, mode,
                [&primes](long long i, std::vector<Finding>& out) {
        std::uint64_t p = primes[static_cast<std::size_t>(i)];
        long lp = static_cast<long>(p);
        BigInt p2 = BigInt(lp) * BigInt(lp);

        auto term_core = [](std::uint64_t k) -> BigInt {
            long lk = static_cast<long>(k);
            BigInt weight = BigInt(28 * lk) * BigInt(lk) + BigInt(18 * lk) + BigInt(3);
            BigInt central = binomial(static_cast<long long>(2 * k), static_cast<long long>(k));
            BigInt c4 = central * central;
            c4 = c4 * c4;
            return weight * c4 * binomial(static_cast<long long>(3 * k), static_cast<long long>(k));
        };

        // Modular sum with (-64)^-k, plus an exact-integer route scaled by
        // (-64)^upper for the cross-check.
        auto weighted_sum = [&term_core](std::uint64_t upper, const PrimePowerRing& ring) {
            BigInt inv = ring.inv(ring.reduce(BigInt(-64)));
            BigInt modular(0), invpow(1);
            for (std::uint64_t k = 0; k <= upper; ++k) {
                modular = ring.reduce(modular + ring.reduce(term_core(k)) * invpow);
                invpow = (invpow * inv) % ring.modulus;
            }
            BigInt exact(0);
            for (std::uint64_t k = 0; k <= upper; ++k) {
                BigInt scale;
                mpz_pow_ui(scale.get_mpz_t(), BigInt(-64).get_mpz_t(),
                           static_cast<unsigned long>(upper - k));
                exact += term_core(k) * scale;
            }
            BigInt scaled_back = ring.reduce(exact);
            BigInt unscale;
            mpz_pow_ui(unscale.get_mpz_t(), BigInt(-64).get_mpz_t(),
                       static_cast<unsigned long>(upper));
            scaled_back = ring.reduce(scaled_back * ring.inv(ring.reduce(unscale)));
            if (scaled_back != modular)
                throw std::logic_error("conj1.4i: the two reduction routes disagree");
            return modular;
        };

        {
            PrimePowerRing ring(p, 6);
            BigInt lhs = weighted_sum(p - 1, ring);
            BigInt half = ring.inv(BigInt(2));
            BigInt rhs = ring.reduce(BigInt(3) * p2 -
                                     BigInt(7) * half % ring.modulus * pow_uu(p, 5) *
                                         bernoulli_mod(p - 3, ring));
            if (lhs != rhs)
                out.push_back({"p=" + std::to_string(p) + " (mod p^6)",
                               "lhs=" + lhs.get_str() + " rhs=" + rhs.get_str(),
                               Severity::Finding});
        }
        {
            PrimePowerRing ring(p, 5);
            BigInt lhs = weighted_sum((p - 1) / 2, ring);
            int chi = legendre_symbol(BigInt(-1), p);
            BigInt rhs = ring.reduce(BigInt(3) * p2 +
                                     BigInt(6 * chi) * pow_uu(p, 4) *
                                         ring.reduce(euler_number(p - 3)));
            if (lhs != rhs)
                out.push_back({"p=" + std::to_string(p) + " (mod p^5, half range)",
                               "lhs=" + lhs.get_str() + " rhs=" + rhs.get_str(),
                               Severity::Finding});
        }
    }, rep.counterexamples);
    return rep;
}

} // namespace cbw
