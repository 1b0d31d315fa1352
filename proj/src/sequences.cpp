#include "cbw/sequences.hpp"

#include <fstream>
#include <stdexcept>

#include "cbw/central.hpp"
#include "cbw/exact.hpp"

namespace cbw {

BigInt S_term(std::uint64_t n) {
    BigRat q = quotient_Q(n);
    if (!is_integer(q))
        throw std::logic_error("S_term: Q(" + std::to_string(n) + ") is not an integer");
    BigInt z = q.get_num();
    if (mpz_odd_p(z.get_mpz_t()))
        throw std::logic_error("S_term: Q(" + std::to_string(n) + ") is odd");
    return z / 2;
}

SequenceTable S_sequence(std::uint64_t count, Exec mode) {
    SequenceTable t{"S", std::vector<BigInt>(count), "formula"};
    if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long n = 1; n <= static_cast<long long>(count); ++n)
            t.terms[static_cast<std::size_t>(n - 1)] = S_term(static_cast<std::uint64_t>(n));
    } else {
        for (std::uint64_t n = 1; n <= count; ++n) t.terms[n - 1] = S_term(n);
    }
    return t;
}

BigRat a_term_closed(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("a_term_closed: n >= 1 required");
    BigInt acc(0);
    for (std::uint64_t k = 0; k < n; ++k) {
        long lk = static_cast<long>(k);
        BigInt weight = BigInt(205 * lk) * BigInt(lk) + BigInt(160 * lk) + BigInt(32);
        BigInt central = binomial(static_cast<long long>(2 * k), static_cast<long long>(k));
        BigInt c2 = central * central;
        BigInt term = weight * c2 * c2 * central;
        if ((n - 1 - k) % 2 == 1) term = -term;
        acc += term;
    }
    long ln = static_cast<long>(n);
    BigInt central_n = binomial(2 * static_cast<long long>(n), static_cast<long long>(n));
    BigInt den = BigInt(8 * ln) * BigInt(ln) * central_n * central_n;
    return make_rat(acc, den);
}

SequenceTable a_sequence_recurrence(std::uint64_t count, std::vector<Finding>* findings) {
    if (count < 1) throw std::invalid_argument("a_sequence_recurrence: count >= 1 required");
    SequenceTable t{"a", std::vector<BigInt>(count), "recurrence"};
    BigRat current(1);
    if (a_term_closed(1) != current)
        throw std::logic_error("a_sequence_recurrence: closed form disagrees at n=1");
    for (std::uint64_t n = 1; n <= count; ++n) {
        if (n > 1) {
            // 4(2m+1)^2 a_{m+1} + m^2 a_m = (205m^2+160m+32) C(2m-1, m)^3 at m = n-1.
            long m = static_cast<long>(n - 1);
            BigInt cm = binomial(2 * static_cast<long long>(m) - 1, static_cast<long long>(m));
            BigRat rhs = BigRat(BigInt(205 * m) * BigInt(m) + BigInt(160 * m) + BigInt(32)) *
                         BigRat(cm * cm * cm);
            BigRat next = (rhs - BigRat(BigInt(m) * BigInt(m)) * current) /
                          BigRat(BigInt(4) * BigInt(2 * m + 1) * BigInt(2 * m + 1));
            if (next != a_term_closed(n))
                throw std::logic_error("a_sequence_recurrence: recurrence and closed form "
                                       "disagree at n=" + std::to_string(n));
            current = next;
        }
        if (!is_integer(current) || current <= 0) {
            if (findings)
                findings->push_back({"n=" + std::to_string(n), "a_n=" + to_string(current),
                                     Severity::Finding});
            t.terms[n - 1] = rat_floor(current);
        } else {
            t.terms[n - 1] = current.get_num();
        }
    }
    return t;
}

RatSeries cubic_series_solve(std::size_t order) {
    if (order < 2) throw std::invalid_argument("cubic_series_solve: order >= 2 required");
    // Substituting y = 1/24 + x z reduces 6912 y^3 - 36 y + 1 - 216 x^2 = 0
    // to 32 x z^3 + 4 z^2 - 1 = 0, which has a simple root at z(0) = 1/2.
    // The positive square root picks the branch with [x^1] y = 1/2.
    std::size_t zorder = order - 1;
    auto phi = [](const RatSeries& z) {
        RatSeries z2 = z * z;
        RatSeries z3 = z2 * z;
        RatSeries r = z3.shifted_up(1).scaled(BigRat(32)) + z2.scaled(BigRat(4));
        r.at(0) -= 1;
        return r;
    };
    auto phi_prime = [](const RatSeries& z) {
        RatSeries z2 = z * z;
        return z2.shifted_up(1).scaled(BigRat(96)) + z.scaled(BigRat(8));
    };
    std::size_t prec = 1;
    RatSeries z(std::vector<BigRat>{make_rat(1, 2)});
    while (prec < zorder) {
        prec = std::min(2 * prec, zorder);
        RatSeries zc = z.truncated(prec);
        RatSeries delta = phi(zc) * phi_prime(zc).inverse();
        z = zc - delta;
    }
    RatSeries y(order);
    y.at(0) = make_rat(1, 24);
    for (std::size_t i = 0; i + 1 < order && i < z.order(); ++i) y.at(i + 1) = z[i];

    // Residual of the original cubic must vanish to the truncation order.
    RatSeries y2 = y * y;
    RatSeries resid = (y2 * y).scaled(BigRat(6912)) - y.scaled(BigRat(36));
    resid.at(0) += 1;
    if (order > 2) resid.at(2) -= 216;
    if (!resid.is_zero())
        throw std::logic_error("cubic_series_solve: nonzero residual");
    return y;
}

TSequenceResult T_sequence(std::uint64_t count) {
    if (count < 1) throw std::invalid_argument("T_sequence: count >= 1 required");
    std::size_t order = 2 * static_cast<std::size_t>(count) + 2;
    RatSeries y = cubic_series_solve(order);
    if (y[0] != make_rat(1, 24) || y[1] != make_rat(1, 2))
        throw std::logic_error("T_sequence: unexpected leading coefficients");
    TSequenceResult res{{"T", std::vector<BigInt>(count), "series-oracle"}, {}};
    for (std::uint64_t k = 1; k <= count; ++k) {
        // Odd coefficients must reproduce S_k; that pins the solver branch.
        if (y[2 * k + 1] != BigRat(S_term(k)))
            throw std::logic_error("T_sequence: odd coefficient mismatch at k=" +
                                   std::to_string(k));
        BigRat tk = -y[2 * k];
        if (!is_integer(tk) || tk <= 0)
            res.findings.push_back({"k=" + std::to_string(k), "T_k=" + to_string(tk),
                                    Severity::Finding});
        res.table.terms[k - 1] = rat_floor(tk);
    }
    return res;
}

ClaimReport check_conjecture_1_1_i(std::uint64_t parity_max, std::uint64_t mod_max, Exec mode) {
    ClaimReport rep{"conj1.1i",
                    "parity n <= " + std::to_string(parity_max) + ", 3S_n mod (2n+3) n <= " +
                        std::to_string(mod_max),
                    {}};
    std::uint64_t n_max = std::max(parity_max, mod_max);
    sweep_index(1, static_cast<long long>(n_max), mode,
                [parity_max, mod_max](long long n, std::vector<Finding>& out) {
        BigInt s = S_term(static_cast<std::uint64_t>(n));
        if (static_cast<std::uint64_t>(n) <= parity_max) {
            bool odd = mpz_odd_p(s.get_mpz_t()) != 0;
            bool pow2 = (n & (n - 1)) == 0;
            if (odd != pow2)
                out.push_back({"n=" + std::to_string(n),
                               std::string("S_n ") + (odd ? "odd" : "even") +
                                   (pow2 ? " at a power of two" : " away from powers of two"),
                               Severity::Finding});
        }
        if (static_cast<std::uint64_t>(n) <= mod_max) {
            BigInt mod(static_cast<long>(2 * n + 3));
            if ((3 * s) % mod != 0)
                out.push_back({"n=" + std::to_string(n), "3 S_n not divisible by 2n+3",
                               Severity::Finding});
        }
    }, rep.counterexamples);
    return rep;
}

PrecReal stirling_ratio(std::uint64_t n, int digits) {
    if (n < 1) throw std::invalid_argument("stirling_ratio: n >= 1 required");
    long bits = bits_for_digits(digits);
    BigRat exact_part = make_rat(S_term(n) * BigInt(8 * static_cast<long>(n)),
                                 pow_uu(108, n));
    PrecReal n_pi = pi_const(bits).mul_small(static_cast<long>(n));
    return PrecReal::from_rat(exact_part, bits) * pr_sqrt(n_pi);
}

namespace {

void export_lines(const SequenceTable& table, const std::string& path, char sep) {
    if (table.terms.empty()) throw std::invalid_argument("export: empty table");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("export: cannot open " + path);
    for (std::size_t i = 0; i < table.terms.size(); ++i)
        os << (i + 1) << sep << table.terms[i].get_str() << '\n';
    os.flush();
    if (!os) throw std::runtime_error("export: write failed for " + path);
}

} // namespace

void export_bfile(const SequenceTable& table, const std::string& path) {
    export_lines(table, path, ' ');
}

void export_tsv(const SequenceTable& table, const std::string& path) {
    export_lines(table, path, '\t');
}

} // namespace cbw
