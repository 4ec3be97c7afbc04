#include "moser/symfun.hpp"

#include "moser/numeric.hpp"
#include "moser/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moser {

NumberMultiset::NumberMultiset(std::vector<Rational> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
}

PowerSumVector power_sums(const NumberMultiset& A, std::size_t upto) {
    if (upto < 1) throw std::invalid_argument("power_sums requires upto >= 1");
    PowerSumVector out;
    out.source_size = A.size();
    out.values.assign(upto, Rational(0));
    for (const Rational& a : A.elements()) {
        Rational power(1);
        for (std::size_t k = 0; k < upto; ++k) {
            power *= a;
            out.values[k] += power;
        }
    }
    return out;
}

NumberMultiset s_sums(const NumberMultiset& A, std::size_t s) {
    const std::size_t n = A.size();
    if (s < 1 || s > n) throw std::invalid_argument("s_sums requires 1 <= s <= n");
    BigInt expected = binom_uu(n, s);
    if (expected > 2000000) throw std::overflow_error("s_sums: C(n,s) exceeds the enumeration cap");

    std::vector<Rational> sums;
    sums.reserve(expected.get_ui());
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        Rational sum(0);
        for (std::size_t i : idx) sum += A.elements()[i];
        sums.push_back(std::move(sum));
        std::size_t i = s;
        bool done = false;
        while (i-- > 0) {
            if (idx[i] != i + n - s) break;
            if (i == 0) done = true;
        }
        if (done) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return NumberMultiset(std::move(sums));
}

Rational elementary_symmetric(const NumberMultiset& A, std::size_t k) {
    if (k > A.size()) throw std::invalid_argument("elementary_symmetric requires k <= n");
    // Coefficient of t^k in prod (1 + a t), accumulated incrementally.
    std::vector<Rational> e(k + 1, Rational(0));
    e[0] = 1;
    std::size_t filled = 0;
    for (const Rational& a : A.elements()) {
        filled = std::min(filled + 1, k);
        for (std::size_t j = filled; j >= 1; --j) e[j] += a * e[j - 1];
    }
    return e[k];
}

std::vector<Rational> newton_p_to_e(const PowerSumVector& p) {
    const std::size_t m = p.order();
    if (m < 1) throw std::invalid_argument("newton_p_to_e requires at least p_1");
    std::vector<Rational> e(m + 1, Rational(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= m; ++k) {
        Rational acc(0);
        for (std::size_t i = 1; i <= k; ++i) {
            if (i % 2 == 1)
                acc += e[k - i] * p.values[i - 1];
            else
                acc -= e[k - i] * p.values[i - 1];
        }
        e[k] = acc / Rational(static_cast<long>(k));
    }
    e.erase(e.begin());
    return e;
}

PowerSumVector newton_e_to_p(const std::vector<Rational>& e) {
    const std::size_t m = e.size();
    if (m < 1) throw std::invalid_argument("newton_e_to_p requires at least e_1");
    PowerSumVector out;
    out.source_size = m;
    out.values.assign(m, Rational(0));
    for (std::size_t k = 1; k <= m; ++k) {
        // Solve k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i for p_k.
        Rational rest(0);
        for (std::size_t i = 1; i < k; ++i) {
            Rational term = (i == k ? Rational(1) : e[k - i - 1]) * out.values[i - 1];
            if (i % 2 == 1)
                rest += term;
            else
                rest -= term;
        }
        Rational pk = Rational(static_cast<long>(k)) * e[k - 1] - rest;
        if (k % 2 == 0) pk = -pk;
        out.values[k - 1] = pk;
    }
    return out;
}

Rational apply_q(const QPolynomial& q, const PowerSumVector& p) {
    if (p.order() < q.k()) throw std::invalid_argument("apply_q: power sums up to k required");
    Rational total(0);
    for (const auto& [lam, coeff] : q.terms()) {
        Rational prod(coeff);
        for (unsigned part : lam.parts()) prod *= p.p(part);
        total += prod;
    }
    return total;
}

NumberMultiset translate(const NumberMultiset& A, const Rational& z) {
    std::vector<Rational> shifted;
    shifted.reserve(A.size());
    for (const Rational& a : A.elements()) shifted.push_back(a + z);
    return NumberMultiset(std::move(shifted));
}

Rational translated_power_sum(const PowerSumVector& p, const Rational& z, std::size_t k) {
    if (k > p.order()) throw std::invalid_argument("translated_power_sum requires k <= order of p");
    Rational total(0);
    Rational z_power(1);
    for (std::size_t i = 0; i <= k; ++i) {
        Rational pk_minus_i = (i == k) ? Rational(static_cast<long>(p.source_size)) : p.values[k - i - 1];
        total += Rational(binom_uu(k, i)) * pk_minus_i * z_power;
        z_power *= z;
    }
    return total;
}

SeriesTable::SeriesTable(std::size_t max_j, std::size_t max_m)
    : max_j_(max_j), max_m_(max_m), data_((max_j + 1) * (max_m + 1), Rational(0)) {}

namespace {

constexpr std::size_t kSeriesBound = 12;

void require_series_bounds(std::size_t max_j, std::size_t max_m) {
    if (max_j > kSeriesBound || max_m > kSeriesBound)
        throw std::invalid_argument("series truncation bounds exceed the guard (12)");
}

SeriesTable series_mul(const SeriesTable& a, const SeriesTable& b) {
    SeriesTable out(a.max_j(), a.max_m());
    for (std::size_t j1 = 0; j1 <= a.max_j(); ++j1)
        for (std::size_t m1 = 0; m1 <= a.max_m(); ++m1) {
            if (a.at(j1, m1) == 0) continue;
            for (std::size_t j2 = 0; j1 + j2 <= a.max_j(); ++j2)
                for (std::size_t m2 = 0; m1 + m2 <= a.max_m(); ++m2) {
                    if (b.at(j2, m2) == 0) continue;
                    out.at(j1 + j2, m1 + m2) += a.at(j1, m1) * b.at(j2, m2);
                }
        }
    return out;
}

}  // namespace

SeriesTable series_lhs(const NumberMultiset& A, std::size_t max_j, std::size_t max_m) {
    require_series_bounds(max_j, max_m);
    SeriesTable table(max_j, max_m);
    table.at(0, 0) = 1;  // p_0(A^(0)) = 1; all other j at m = 0 stay 0
    const std::size_t n = A.size();
    for (std::size_t m = 1; m <= std::min(max_m, n); ++m) {
        NumberMultiset Am = s_sums(A, m);
        // Row j = 0 counts the elements: C(n,m).
        table.at(0, m) = Rational(BigInt(Am.size()));
        if (max_j == 0) continue;
        PowerSumVector ps = power_sums(Am, max_j);
        Rational fact(1);
        for (std::size_t j = 1; j <= max_j; ++j) {
            fact *= Rational(static_cast<long>(j));
            table.at(j, m) = ps.values[j - 1] / fact;
        }
    }
    return table;
}

SeriesTable series_rhs(const NumberMultiset& A, std::size_t max_j, std::size_t max_m) {
    require_series_bounds(max_j, max_m);
    const std::size_t n = A.size();

    // Argument of the exponential: (-1)^(m-1) (p_j(A)/j!) m^(j-1) x^j y^m.
    SeriesTable arg(max_j, max_m);
    if (max_j >= 1 && max_m >= 1) {
        PowerSumVector ps = power_sums(A, max_j);
        Rational fact(1);
        for (std::size_t j = 1; j <= max_j; ++j) {
            fact *= Rational(static_cast<long>(j));
            Rational lj = ps.values[j - 1] / fact;
            for (std::size_t m = 1; m <= max_m; ++m) {
                Rational entry = lj * Rational(int_pow(m, j - 1));
                arg.at(j, m) = (m % 2 == 1) ? entry : -entry;
            }
        }
    }

    // exp(arg) = sum_t arg^t / t!; arg has no terms below bidegree (1,1), so
    // powers beyond min(max_j, max_m) vanish under truncation.
    SeriesTable exp_part(max_j, max_m);
    exp_part.at(0, 0) = 1;
    SeriesTable power = exp_part;  // arg^0
    Rational t_fact(1);
    for (std::size_t t = 1; t <= std::min(max_j, max_m); ++t) {
        power = series_mul(power, arg);
        t_fact *= Rational(static_cast<long>(t));
        for (std::size_t j = 0; j <= max_j; ++j)
            for (std::size_t m = 0; m <= max_m; ++m) exp_part.at(j, m) += power.at(j, m) / t_fact;
    }

    // (1+y)^n contributes C(n,m) y^m.
    SeriesTable binom_y(max_j, max_m);
    for (std::size_t m = 0; m <= max_m; ++m) binom_y.at(0, m) = Rational(binom_uu(n, m));

    return series_mul(binom_y, exp_part);
}

EsymCheckReport esym_top_coefficient_check(unsigned s, unsigned k, unsigned n, unsigned trials,
                                           std::uint64_t seed) {
    if (k > n || s < 1 || s > n || k < 1)
        throw std::invalid_argument("esym_top_coefficient_check requires 1 <= s <= n and 1 <= k <= n");
    const double tolerance = 1e-6;
    EsymCheckReport report;
    report.passed = true;
    SplitMix64 rng(seed);

    Rational m_value = moser_value(s, k, Rational(static_cast<long>(n)));
    const double m_double = to_double(m_value);

    for (unsigned trial = 0; trial < trials; ++trial) {
        // Shared e_1..e_{k-1}, two different e_k, arbitrary shared tail.
        std::vector<Rational> shared(n);
        for (auto& e : shared) e = Rational(rng.range(-4, 4));
        std::vector<Rational> e_b = shared;
        e_b[k - 1] += Rational(rng.range(1, 3));

        auto realize = [&](const std::vector<Rational>& e) -> std::vector<ComplexApprox> {
            // Monic polynomial with prescribed elementary symmetric values.
            std::vector<Rational> coeffs(n + 1);
            coeffs[n] = 1;
            for (unsigned i = 1; i <= n; ++i) {
                coeffs[n - i] = (i % 2 == 0) ? e[i - 1] : -e[i - 1];
            }
            NumericRoots roots = roots_numeric(DensePolynomial(std::move(coeffs)), 1e-12);
            if (!roots.converged) return {};
            return roots.roots;
        };

        std::vector<ComplexApprox> A = realize(shared);
        std::vector<ComplexApprox> B = realize(e_b);
        if (A.empty() || B.empty()) {
            ++report.nonconverged;
            continue;
        }
        ++report.trials_run;

        auto combination = [&](const std::vector<ComplexApprox>& roots) {
            std::complex<double> ek_s = complex_elementary_symmetric(complex_s_sums(roots, s), k);
            std::complex<double> ek = complex_elementary_symmetric(roots, k);
            return ek_s - m_double * ek;
        };
        double deviation = std::abs(combination(A) - combination(B));
        report.max_deviation = std::max(report.max_deviation, deviation);
        if (deviation > tolerance) report.passed = false;
    }
    return report;
}

}  // namespace moser
