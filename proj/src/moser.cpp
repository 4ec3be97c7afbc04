#include "moser/moser.hpp"

#include <stdexcept>

namespace moser {

namespace {

void require_sk(unsigned s, unsigned k) {
    if (s < 1 || k < 1) throw std::invalid_argument("moser polynomial indices require s >= 1, k >= 1");
}

// F extended to nonpositive first index as the empty sum (used by the
// duality and multistep identities, where n-s or s-1 may leave the range).
Rational moser_value_ext(long s, unsigned k, const Rational& x) {
    if (s < 1) return Rational(0);
    return moser_value(static_cast<unsigned>(s), k, x);
}

}  // namespace

Rational moser_value(unsigned s, unsigned k, const Rational& x) {
    require_sk(s, k);
    Rational total(0);
    for (unsigned j = 1; j <= s; ++j) {
        Rational term = Rational(int_pow(j, k - 1)) * binomial(x, static_cast<long>(s - j));
        if (j % 2 == 1)
            total += term;
        else
            total -= term;
    }
    return total;
}

DensePolynomial MoserPolynomial::normalized() const {
    return poly * Rational(factorial(s - 1));
}

MoserPolynomial moser_coefficients(unsigned s, unsigned k) {
    require_sk(s, k);
    // Coefficient of x^j: (-1)^(s+j-1) sum_{i=j}^{s-1} (s-i)^(k-1)/i! * c(i,j),
    // obtained by expanding each C(x, s-j) of the defining sum over the
    // monomial basis. The sum stops at i = s-1: the would-be i = s term is
    // 0^(k-1), which must not contribute even for k = 1.
    std::vector<Rational> coeffs(s, Rational(0));
    for (unsigned j = 0; j < s; ++j) {
        Rational sum(0);
        for (unsigned i = j; i < s; ++i) {
            Rational term(BigInt(int_pow(s - i, k - 1) * stirling1_unsigned(i, j)), factorial(i));
            term.canonicalize();
            sum += term;
        }
        if ((s + j - 1) % 2 != 0) sum = -sum;
        coeffs[j] = sum;
    }
    return MoserPolynomial{s, k, DensePolynomial(std::move(coeffs), Basis::Monomial)};
}

namespace {

// Shared core of both c_lambda forms: accumulates
//   sum over length-d compositions M of t of prod_i m_i^(lam_i - 1).
BigInt composition_power_sum(unsigned t, const std::vector<unsigned>& lam) {
    BigInt sum = 0;
    for (const Composition& m : compositions_of(t, static_cast<unsigned>(lam.size()))) {
        BigInt prod = 1;
        for (std::size_t i = 0; i < lam.size(); ++i) prod *= int_pow(m.parts[i], lam[i] - 1);
        sum += prod;
    }
    return sum;
}

BigInt c_lambda_prefactor_divide(const Partition& lam, const BigInt& alternating_sum) {
    // k! / (lam_1!..lam_d! delta_1!..delta_q!) times the sum must come out an
    // integer; a remainder means an implementation bug, not bad input.
    BigInt num = factorial(lam.weight()) * alternating_sum;
    BigInt den = 1;
    for (unsigned part : lam.parts()) den *= factorial(part);
    for (unsigned mult : lam.multiplicities()) den *= factorial(mult);
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("c_lambda: multinomial prefactor division left a remainder");
    return q;
}

void require_clambda_args(unsigned s, unsigned k, unsigned n, const Partition& lam) {
    require_sk(s, k);
    if (lam.weight() != k) throw std::invalid_argument("c_lambda: partition weight must equal k");
    if (k > n || s > n) throw std::invalid_argument("c_lambda requires k <= n and s <= n");
}

}  // namespace

BigInt c_lambda(unsigned s, unsigned k, unsigned n, const Partition& lam) {
    require_clambda_args(s, k, n, lam);
    const unsigned d = static_cast<unsigned>(lam.length());
    if (d > s) return 0;
    BigInt total = 0;
    for (unsigned p = 0; p + d <= s; ++p) {
        BigInt term = binom_uu(n, p) * composition_power_sum(s - p, lam.parts());
        if (p % 2 == 0)
            total += term;
        else
            total -= term;
    }
    BigInt result = c_lambda_prefactor_divide(lam, total);
    if ((s + d) % 2 != 0) result = -result;
    return result;
}

BigInt c_lambda_alt(unsigned s, unsigned k, unsigned n, const Partition& lam) {
    require_clambda_args(s, k, n, lam);
    const unsigned d = static_cast<unsigned>(lam.length());
    if (d > s) return 0;
    BigInt total = 0;
    for (unsigned t = d; t <= s; ++t) {
        BigInt term = binom_uu(n, s - t) * composition_power_sum(t, lam.parts());
        if (t % 2 == 0)
            total += term;
        else
            total -= term;
    }
    BigInt result = c_lambda_prefactor_divide(lam, total);
    if (d % 2 != 0) result = -result;
    return result;
}

QPolynomial::QPolynomial(unsigned s, unsigned k, unsigned n, std::vector<std::pair<Partition, BigInt>> terms)
    : s_(s), k_(k), n_(n), terms_(std::move(terms)) {
    for (const auto& [lam, coeff] : terms_) {
        if (lam.weight() != k_) throw std::invalid_argument("QPolynomial: term partition of wrong weight");
        if (coeff == 0) throw std::invalid_argument("QPolynomial: zero coefficients must be omitted");
        if (lam.length() > s_) throw std::invalid_argument("QPolynomial: partition longer than s");
    }
}

BigInt QPolynomial::coefficient(const Partition& lam) const {
    for (const auto& [p, c] : terms_)
        if (p == lam) return c;
    return 0;
}

QPolynomial q_polynomial(unsigned s, unsigned k, unsigned n) {
    require_sk(s, k);
    if (k > n || s > n) throw std::invalid_argument("q_polynomial requires k <= n and s <= n");
    std::vector<std::pair<Partition, BigInt>> terms;
    for (const Partition& lam : partitions_of(k)) {
        BigInt c = c_lambda(s, k, n, lam);
        if (c != 0) terms.emplace_back(lam, std::move(c));
    }
    return QPolynomial(s, k, n, std::move(terms));
}

Rational moser_value_eulerian_form(unsigned s, unsigned k, const Rational& x) {
    require_sk(s, k);
    Rational total(0);
    const Rational shifted = x - Rational(static_cast<long>(k));
    for (unsigned j = 0; j < s; ++j) {
        Rational term = Rational(eulerian(k - 1, static_cast<long long>(s) - j - 1)) *
                        binomial(shifted, static_cast<long>(j));
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    if (s % 2 == 0) total = -total;
    return total;
}

std::pair<Rational, Rational> moser_value_stirling_forms(unsigned s, unsigned k, const Rational& x) {
    require_sk(s, k);
    Rational first(0);
    for (unsigned i = 1; i <= k; ++i) {
        Rational term = Rational(BigInt(factorial(i - 1) * stirling2(k, i))) *
                        binomial(x - Rational(static_cast<long>(i)), static_cast<long>(s) - static_cast<long>(i));
        if (i % 2 == 1)
            first += term;
        else
            first -= term;
    }
    Rational second(0);
    // The i = 0 term carries S(k-1,0) and matters exactly when k = 1.
    for (unsigned i = 0; i <= k; ++i) {
        Rational term = Rational(BigInt(factorial(i) * stirling2(k - 1, i))) *
                        binomial(x - Rational(static_cast<long>(i) + 1), static_cast<long>(s) - 1);
        if ((i + k - 1) % 2 == 0)
            second += term;
        else
            second -= term;
    }
    return {first, second};
}

bool check_duality(unsigned s, unsigned k, unsigned n) {
    if (k <= 1 || n < k || s < 1) throw std::invalid_argument("check_duality requires s >= 1, k > 1, n >= k");
    const Rational at_n(static_cast<long>(n));
    Rational lhs = moser_value(s, k, at_n);
    Rational rhs = moser_value_ext(static_cast<long>(n) - static_cast<long>(s), k, at_n);
    if (k % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

bool check_recurrences(unsigned s, unsigned k, unsigned n) {
    if (s < 2 || k < 1 || n < 2) throw std::invalid_argument("check_recurrences requires s >= 2, k >= 1, n >= 2");
    const Rational at_n(static_cast<long>(n));
    bool grow_n = moser_value(s, k, at_n + 1) == moser_value(s, k, at_n) + moser_value(s - 1, k, at_n);
    bool grow_k = moser_value(s, k + 1, at_n) ==
                  Rational(static_cast<long>(s)) * moser_value(s, k, at_n) -
                      at_n * moser_value(s - 1, k, at_n - 1);
    return grow_n && grow_k;
}

bool check_multistep(unsigned s, unsigned k, const Rational& x, unsigned d) {
    require_sk(s, k);
    if (d < 1) throw std::invalid_argument("check_multistep requires d >= 1");
    const Rational x_plus_d = x + Rational(static_cast<long>(d));

    Rational binom_sum(0);
    for (unsigned j = 0; j <= d; ++j) binom_sum += Rational(binom_uu(d, j)) * moser_value(s + j, k, x);
    bool first = moser_value(s + d, k, x_plus_d) == binom_sum;

    Rational telescoped = moser_value(s, k, x);
    for (unsigned j = 0; j < d; ++j)
        telescoped += moser_value_ext(static_cast<long>(s) - 1, k, x + Rational(static_cast<long>(j)));
    bool second = moser_value(s, k, x_plus_d) == telescoped;

    return first && second;
}

bool eulerian_poly_identity(unsigned k, unsigned n) {
    if (k < 2 || n < k) throw std::invalid_argument("eulerian_poly_identity requires k >= 2, n >= k");
    // A_{k-1}(x)
    std::vector<Rational> eul(k - 1);
    for (unsigned m = 0; m + 1 < k; ++m) eul[m] = Rational(eulerian(k - 1, m));
    DensePolynomial lhs(std::move(eul));
    // (1-x)^(n-k)
    DensePolynomial one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    for (unsigned i = 0; i < n - k; ++i) lhs = lhs * one_minus_x;

    std::vector<Rational> rhs(n);
    for (unsigned s = 1; s <= n; ++s) {
        Rational v = moser_value(s, k, Rational(static_cast<long>(n)));
        rhs[s - 1] = (s % 2 == 1) ? v : -v;
    }
    return lhs == DensePolynomial(std::move(rhs));
}

bool check_binomial_identity(unsigned s, unsigned j, unsigned n) {
    if (j > s || s > n) throw std::invalid_argument("check_binomial_identity requires 0 <= j <= s <= n");
    BigInt lhs = 0;
    for (unsigned i = 0; i <= s; ++i) lhs += binom_uu(i, j) * binom_uu(n - i, n - s);
    return lhs == binom_uu(n + 1, s - j);
}

}  // namespace moser
