#pragma once

#include "moser/combinatorics.hpp"
#include "moser/polynomial.hpp"

#include <utility>
#include <vector>

namespace moser {

// Moser polynomial F_{s,k}, degree s-1 in x, held in the monomial basis.
// (s-1)! * F_{s,k} has integer coefficients with strictly alternating signs.
struct MoserPolynomial {
    unsigned s = 0;
    unsigned k = 0;
    DensePolynomial poly;

    // (s-1)! * poly; integer coefficients.
    DensePolynomial normalized() const;
};

// Expansion of p_k(A^(s)) as an integer-coefficient polynomial in the power
// sums p_1..p_k of an n-multiset A, indexed by the partitions of k. Terms are
// kept in reverse-lexicographic partition order with zero coefficients
// omitted; the {k} term, when present, is the Moser value M_{s,k,n}.
class QPolynomial {
public:
    QPolynomial(unsigned s, unsigned k, unsigned n, std::vector<std::pair<Partition, BigInt>> terms);

    unsigned s() const { return s_; }
    unsigned k() const { return k_; }
    unsigned n() const { return n_; }
    const std::vector<std::pair<Partition, BigInt>>& terms() const { return terms_; }

    // 0 when the partition is absent.
    BigInt coefficient(const Partition& lam) const;
    // Coefficient of the single-part partition {k}.
    BigInt top_coefficient() const { return coefficient(Partition::single(k_)); }

private:
    unsigned s_, k_, n_;
    std::vector<std::pair<Partition, BigInt>> terms_;
};

// F_{s,k}(x) = sum_{j=1}^{s} (-1)^(j-1) j^(k-1) C(x, s-j).
// At integer x = n >= max(s,k) this is M_{s,k,n}, the coefficient of p_k(A)
// in the expansion of p_k(A^(s)).
Rational moser_value(unsigned s, unsigned k, const Rational& x);

// Monomial coefficients of F_{s,k} via the unsigned Stirling-1 expansion.
MoserPolynomial moser_coefficients(unsigned s, unsigned k);

// Coefficient c_lambda of p_lambda in Q_{s,k,n}:
//
//             (-1)^(s+d) k!
//   c_lam = ----------------- sum_{p=0}^{s} sum_{|M|=s-p, len d} (-1)^p C(n,p) prod m_i^(lam_i - 1)
//           lam_1!..lam_d! delta_1!..delta_q!
//
// Always an integer; the division is asserted exact. Zero whenever the
// partition is longer than s.
BigInt c_lambda(unsigned s, unsigned k, unsigned n, const Partition& lam);

// Same coefficient via the single-sum form over compositions of every total
// t <= s weighted by C(n, s-t); cross-validation partner of c_lambda.
BigInt c_lambda_alt(unsigned s, unsigned k, unsigned n, const Partition& lam);

// Q_{s,k,n} assembled partition-by-partition from c_lambda.
QPolynomial q_polynomial(unsigned s, unsigned k, unsigned n);

// F_{s,k}(x) = (-1)^(s-1) sum_j (-1)^j <k-1, s-j-1> C(x-k, j).
Rational moser_value_eulerian_form(unsigned s, unsigned k, const Rational& x);

// Both Stirling-number forms of F_{s,k}(x):
//   first:  sum_{i>=1} (-1)^(i-1) (i-1)! S(k,i)    C(x-i,   s-i)
//   second: sum_{i>=0} (-1)^(i+k-1) i! S(k-1,i) C(x-i-1, s-1)
std::pair<Rational, Rational> moser_value_stirling_forms(unsigned s, unsigned k, const Rational& x);

// F_{s,k}(n) == (-1)^k F_{n-s,k}(n), for k > 1, n >= k (F with a
// nonpositive first index is the empty sum).
bool check_duality(unsigned s, unsigned k, unsigned n);

// Both one-step recurrences at integer indices:
//   M_{s,k,n+1} = M_{s,k,n} + M_{s-1,k,n}
//   M_{s,k+1,n} = s M_{s,k,n} - n M_{s-1,k,n-1}
bool check_recurrences(unsigned s, unsigned k, unsigned n);

// d-step consequences of the first recurrence:
//   F_{s+d,k}(x+d) = sum_j C(d,j) F_{s+j,k}(x)
//   F_{s,k}(x+d)   = F_{s,k}(x) + sum_{j<d} F_{s-1,k}(x+j)
bool check_multistep(unsigned s, unsigned k, const Rational& x, unsigned d);

// Coefficient-wise identity between (1-x)^(n-k) A_{k-1}(x) and
// sum_{s>=1} (-1)^(s-1) F_{s,k}(n) x^(s-1), where A_{k-1} is the Eulerian
// polynomial. Requires k >= 2, n >= k.
bool eulerian_poly_identity(unsigned k, unsigned n);

// sum_{i=0}^{s} C(i,j) C(n-i, n-s) == C(n+1, s-j) for 0 <= j <= s <= n.
bool check_binomial_identity(unsigned s, unsigned j, unsigned n);

}  // namespace moser
