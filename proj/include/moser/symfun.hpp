#pragma once

#include "moser/moser.hpp"
#include "moser/numbers.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace moser {

// Unordered collection of exact rationals with multiplicity, stored sorted so
// equality is structural.
class NumberMultiset {
public:
    NumberMultiset() = default;
    explicit NumberMultiset(std::vector<Rational> elements);

    const std::vector<Rational>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    bool operator==(const NumberMultiset&) const = default;

private:
    std::vector<Rational> elements_;  // ascending
};

// p_1..p_m of a source multiset of size n.
struct PowerSumVector {
    std::vector<Rational> values;
    std::size_t source_size = 0;

    std::size_t order() const { return values.size(); }
    // 1-based accessor: p(k) = p_k.
    const Rational& p(std::size_t k) const { return values.at(k - 1); }
};

PowerSumVector power_sums(const NumberMultiset& A, std::size_t upto);

// A^(s): all C(n,s) sums over strictly increasing index s-tuples.
// Enumeration is capped at C(n,s) <= 2*10^6 (std::overflow_error beyond).
NumberMultiset s_sums(const NumberMultiset& A, std::size_t s);

// e_k(A); e_0 = 1. k > n is rejected.
Rational elementary_symmetric(const NumberMultiset& A, std::size_t k);

// e_1..e_m from p_1..p_m by the Newton-Girard recurrence
//   k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i .
std::vector<Rational> newton_p_to_e(const PowerSumVector& p);

// Inverse of newton_p_to_e; source_size of the result is e.size().
PowerSumVector newton_e_to_p(const std::vector<Rational>& e);

// sum_lam c_lam prod_i p_{lam_i}; equals p_k(A^(s)) when p = power_sums(A)
// and q = q_polynomial(s, k, |A|).
Rational apply_q(const QPolynomial& q, const PowerSumVector& p);

// Elementwise x -> x + z.
NumberMultiset translate(const NumberMultiset& A, const Rational& z);

// p_k of the translated multiset from the power sums of the original:
// sum_i C(k,i) p_{k-i} z^i, with p_0 = n.
Rational translated_power_sum(const PowerSumVector& p, const Rational& z, std::size_t k);

// Truncated bivariate table, entry (j, m) for 0 <= j <= max_j, 0 <= m <= max_m.
class SeriesTable {
public:
    SeriesTable(std::size_t max_j, std::size_t max_m);

    std::size_t max_j() const { return max_j_; }
    std::size_t max_m() const { return max_m_; }
    Rational& at(std::size_t j, std::size_t m) { return data_[j * (max_m_ + 1) + m]; }
    const Rational& at(std::size_t j, std::size_t m) const { return data_[j * (max_m_ + 1) + m]; }

    bool operator==(const SeriesTable&) const = default;

private:
    std::size_t max_j_, max_m_;
    std::vector<Rational> data_;
};

// Left side of the central generating-function identity: entry (j, m) is
// p_j(A^(m))/j!, by direct enumeration of A^(m).
SeriesTable series_lhs(const NumberMultiset& A, std::size_t max_j, std::size_t max_m);

// Right side: the truncated expansion of
//   (1+y)^n exp( sum_{j,m>=1} (-1)^(m-1) (p_j(A)/j!) m^(j-1) x^j y^m ).
// Equality with series_lhs is the oracle for the identity itself.
SeriesTable series_rhs(const NumberMultiset& A, std::size_t max_j, std::size_t max_m);

struct EsymCheckReport {
    bool passed = false;
    unsigned trials_run = 0;
    unsigned nonconverged = 0;  // trials skipped because the root finder failed
    double max_deviation = 0.0;
};

// Numeric spot-check that e_k(A^(s)) - M_{s,k,n} e_k(A) depends only on
// e_1..e_{k-1}: pairs of (generally complex) n-multisets sharing e_1..e_{k-1}
// but differing in e_k are realized through the numeric root finder, and the
// combination is compared across the pair to 1e-6.
EsymCheckReport esym_top_coefficient_check(unsigned s, unsigned k, unsigned n, unsigned trials,
                                           std::uint64_t seed = 0x5eed);

}  // namespace moser
