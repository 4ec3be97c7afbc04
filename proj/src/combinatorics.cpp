#include "moser/combinatorics.hpp"

#include <stdexcept>

namespace moser {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
    unsigned prev = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > prev) throw std::invalid_argument("partition parts must be non-increasing");
        prev = parts_[i];
        weight_ += parts_[i];
    }
}

std::vector<unsigned> Partition::multiplicities() const {
    std::vector<unsigned> delta;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i == 0 || parts_[i] != parts_[i - 1])
            delta.push_back(1);
        else
            ++delta.back();
    }
    return delta;
}

Rational falling_power(const Rational& x, unsigned p) {
    Rational r(1);
    Rational factor = x;
    for (unsigned m = 0; m < p; ++m) {
        r *= factor;
        factor -= 1;
    }
    return r;
}

Rational binomial(const Rational& x, long j) {
    if (j < 0) return Rational(0);
    Rational r = falling_power(x, static_cast<unsigned>(j));
    r /= Rational(factorial(static_cast<unsigned long>(j)));
    return r;
}

namespace {

// Descending recursion: first part from largest down, then partitions of the
// rest with parts no bigger. This is exactly reverse-lexicographic order.
void emit_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    unsigned top = remaining < max_part ? remaining : max_part;
    for (unsigned first = top; first >= 1; --first) {
        prefix.push_back(first);
        emit_partitions(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned k) {
    if (k == 0) throw std::invalid_argument("partitions_of requires k >= 1");
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    emit_partitions(k, k, prefix, out);
    return out;
}

std::vector<Composition> compositions_of(unsigned t, unsigned d) {
    if (t == 0 || d == 0) throw std::invalid_argument("compositions_of requires t >= 1, d >= 1");
    std::vector<Composition> out;
    if (d > t) return out;
    // Odometer over d positive parts, least-significant position last.
    std::vector<unsigned> parts(d, 1);
    parts.back() = t - (d - 1);
    while (true) {
        out.push_back(Composition{parts});
        // Find the rightmost position (excluding the last) that can absorb one
        // unit from the tail.
        std::size_t i = d - 1;
        while (i > 0 && parts[i] == 1) --i;
        if (i == 0) break;
        // Move one unit from position i..end into position i-1, resetting the tail.
        unsigned tail = 0;
        for (std::size_t j = i; j < d; ++j) {
            tail += parts[j];
            parts[j] = 1;
        }
        ++parts[i - 1];
        parts[d - 1] = tail - 1 - (static_cast<unsigned>(d - i) - 1);
    }
    return out;
}

BigInt eulerian(unsigned long n, long long m) {
    // <0,0> = 1 (the empty permutation); otherwise zero outside the triangle.
    if (n == 0) return m == 0 ? BigInt(1) : BigInt(0);
    if (m < 0 || static_cast<unsigned long>(m) >= n) return 0;
    BigInt total = 0;
    for (long long j = 0; j <= m; ++j) {
        BigInt term = binom_uu(n + 1, static_cast<unsigned long>(j)) *
                      int_pow(static_cast<unsigned long>(m + 1 - j), n);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

BigInt stirling1_unsigned(unsigned long i, unsigned long j) {
    if (j > i) return 0;
    // Row-by-row table; rows are short (i is small everywhere we are called).
    std::vector<BigInt> row{1};  // row 0
    for (unsigned long r = 1; r <= i; ++r) {
        std::vector<BigInt> next(r + 1);
        for (unsigned long c = 0; c <= r; ++c) {
            BigInt v = 0;
            if (c > 0) v += row[c - 1];
            if (c < r) v += BigInt(r - 1) * row[c];
            next[c] = v;
        }
        row = std::move(next);
    }
    return row[j];
}

BigInt stirling2(unsigned long n, unsigned long m) {
    BigInt total = 0;
    for (unsigned long j = 0; j <= m; ++j) {
        BigInt term = binom_uu(m, j) * int_pow(j, n);
        if ((m - j) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), factorial(m).get_mpz_t());
    if (r != 0) throw std::logic_error("stirling2: inexact division by m!");
    return q;
}

}  // namespace moser
