#include "moser/verify.hpp"

#include "moser/moser.hpp"
#include "moser/numeric.hpp"
#include "moser/recovery.hpp"
#include "moser/sampling.hpp"
#include "moser/symfun.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace moser {

namespace {

// Small accumulator so each property body only reports cases and failures.
class Property {
public:
    explicit Property(std::string name) { result_.name = std::move(name); }

    void count() { ++result_.cases; }

    template <typename... Parts>
    void expect(bool ok, const Parts&... parts) {
        ++result_.cases;
        if (ok || failed_) return;
        failed_ = true;
        std::ostringstream oss;
        (oss << ... << parts);
        result_.counterexample = oss.str();
    }

    bool failed() const { return failed_; }

    PropertyResult finish() {
        result_.passed = !failed_;
        return result_;
    }

private:
    PropertyResult result_;
    bool failed_ = false;
};

Rational rat(long v) { return Rational(v); }

// ----- identities ---------------------------------------------------------

PropertyResult eulerian_triangle_checks() {
    Property prop("eulerian.triangle");
    for (unsigned n = 0; n <= 12; ++n) {
        BigInt row_sum = 0;
        for (long long m = 0; m < static_cast<long long>(std::max(n, 1u)); ++m) {
            row_sum += eulerian(n, m);
            if (n >= 1 && m < n)
                prop.expect(eulerian(n, m) == eulerian(n, static_cast<long long>(n) - 1 - m),
                            "symmetry fails at n=", n, " m=", m);
            // Independent recurrence <n,m> = (m+1)<n-1,m> + (n-m)<n-1,m-1>.
            if (n >= 1)
                prop.expect(eulerian(n, m) == BigInt(static_cast<long>(m + 1)) * eulerian(n - 1, m) +
                                                  BigInt(static_cast<long>(n) - static_cast<long>(m)) *
                                                      eulerian(n - 1, m - 1),
                            "recurrence fails at n=", n, " m=", m);
        }
        prop.expect(row_sum == factorial(n), "row sum != n! at n=", n);
    }
    return prop.finish();
}

PropertyResult knuth_identity() {
    Property prop("eulerian.knuth-stirling");
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 0; k < n; ++k) {
            BigInt sum = 0;
            for (unsigned i = k; i < n; ++i) {
                BigInt term = binom_uu(i, k) * factorial(n - i) * stirling2(n, n - i);
                if ((i - k) % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            prop.expect(sum == eulerian(n, k), "fails at n=", n, " k=", k);
        }
    return prop.finish();
}

PropertyResult form_agreement() {
    Property prop("moser.form-agreement");
    for (unsigned s = 1; s <= 8; ++s)
        for (unsigned k = 1; k <= 8; ++k)
            for (long twice_x = -10; twice_x <= 30; ++twice_x) {
                Rational x(twice_x, 2);
                x.canonicalize();
                Rational reference = moser_value(s, k, x);
                auto [st1, st2] = moser_value_stirling_forms(s, k, x);
                prop.expect(moser_value_eulerian_form(s, k, x) == reference,
                            "eulerian form differs at s=", s, " k=", k, " 2x=", twice_x);
                prop.expect(st1 == reference, "stirling form 1 differs at s=", s, " k=", k, " 2x=", twice_x);
                prop.expect(st2 == reference, "stirling form 2 differs at s=", s, " k=", k, " 2x=", twice_x);
            }
    return prop.finish();
}

PropertyResult moser_identity_grid() {
    Property prop("moser.identity-grid");
    for (unsigned s = 1; s <= 10; ++s)
        for (unsigned k = 2; k <= 10; ++k)
            for (unsigned n = k; n <= 10; ++n)
                prop.expect(check_duality(s, k, n), "duality fails at s=", s, " k=", k, " n=", n);
    for (unsigned s = 2; s <= 10; ++s)
        for (unsigned k = 1; k <= 10; ++k)
            for (unsigned n = 2; n <= 10; ++n)
                prop.expect(check_recurrences(s, k, n), "recurrence fails at s=", s, " k=", k, " n=", n);
    for (unsigned s = 1; s <= 6; ++s)
        for (unsigned k = 1; k <= 6; ++k)
            for (unsigned d = 1; d <= 6; ++d)
                for (long x = -3; x <= 6; ++x)
                    prop.expect(check_multistep(s, k, rat(x), d),
                                "multistep fails at s=", s, " k=", k, " d=", d, " x=", x);
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned s = 0; s <= n; ++s)
            for (unsigned j = 0; j <= s; ++j)
                prop.expect(check_binomial_identity(s, j, n), "binomial identity fails at s=", s, " j=", j,
                            " n=", n);
    for (unsigned k = 2; k <= 8; ++k)
        for (unsigned n = k; n <= 10; ++n)
            prop.expect(eulerian_poly_identity(k, n), "eulerian polynomial identity fails at k=", k, " n=", n);
    return prop.finish();
}

PropertyResult clambda_cross_checks() {
    Property prop("moser.c-lambda");
    for (unsigned k = 1; k <= 7; ++k) {
        const auto partitions = partitions_of(k);
        for (unsigned s = 1; s <= 7; ++s)
            for (unsigned n = std::max(s, k); n <= 9; ++n)
                for (const Partition& lam : partitions) {
                    BigInt a = c_lambda(s, k, n, lam);  // would throw on an inexact division
                    prop.expect(a == c_lambda_alt(s, k, n, lam), "forms differ at s=", s, " k=", k, " n=", n);
                    if (lam.length() > s) prop.expect(a == 0, "support violation at s=", s, " k=", k, " n=", n);
                }
    }
    return prop.finish();
}

PropertyResult moser_coefficient_checks() {
    Property prop("moser.coefficients");
    for (unsigned s = 1; s <= 8; ++s)
        for (unsigned k = 1; k <= 8; ++k) {
            MoserPolynomial f = moser_coefficients(s, k);
            prop.expect(f.poly.degree() == static_cast<int>(s) - 1, "degree wrong at s=", s, " k=", k);
            DensePolynomial normalized = f.normalized();
            for (std::size_t j = 0; j < normalized.coefficients().size(); ++j)
                prop.expect(is_integer(normalized.coefficients()[j]), "non-integer normalized coeff at s=", s,
                            " k=", k, " j=", j);
            // Signs alternate with degree parity; zero coefficients are neutral.
            for (std::size_t j = 0; j + 1 < s; ++j) {
                const Rational& c = f.poly.coefficients()[j];
                if (c == 0) continue;
                int expected_sign = ((s - 1 - j) % 2 == 0) ? 1 : -1;
                prop.expect(sgn(c) == expected_sign, "sign pattern broken at s=", s, " k=", k, " j=", j);
            }
            for (unsigned x = 0; x <= 2 * s; ++x)
                prop.expect(f.poly.eval(rat(x)) == moser_value(s, k, rat(x)), "eval mismatch at s=", s,
                            " k=", k, " x=", x);
        }
    return prop.finish();
}

PropertyResult qpolynomial_structure() {
    Property prop("moser.q-polynomial");
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned s = 1; s <= n; ++s)
            for (unsigned k = 1; k <= std::min(n, 6u); ++k) {
                QPolynomial q = q_polynomial(s, k, n);
                prop.expect(Rational(q.top_coefficient()) == moser_value(s, k, rat(n)),
                            "top coefficient != Moser value at s=", s, " k=", k, " n=", n);
                for (const auto& [lam, coeff] : q.terms()) {
                    prop.expect(lam.weight() == k && coeff != 0 && lam.length() <= s,
                                "malformed term at s=", s, " k=", k, " n=", n);
                }
            }
    return prop.finish();
}

PropertyResult stirling_basis_consistency(unsigned trials, std::uint64_t seed) {
    Property prop("polynomial.basis");
    // x^[i] expanded by repeated multiplication is the independent reference.
    DensePolynomial falling_sym = DensePolynomial::constant(rat(1));
    for (unsigned i = 0; i <= 10; ++i) {
        if (i > 0) falling_sym = falling_sym * DensePolynomial({rat(-(static_cast<long>(i) - 1)), rat(1)});
        std::vector<Rational> unit(i + 1, rat(0));
        unit[i] = 1;
        DensePolynomial converted = convert_basis(DensePolynomial(unit, Basis::FallingFactorial), Basis::Monomial);
        prop.expect(converted == falling_sym, "x^[", i, "] expansion mismatch");
    }
    SplitMix64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::size_t degree = rng.below(21);
        std::vector<Rational> coeffs;
        for (std::size_t i = 0; i <= degree; ++i) coeffs.push_back(random_rational(rng, 9, 4));
        DensePolynomial p(coeffs);
        DensePolynomial falling = convert_basis(p, Basis::FallingFactorial);
        prop.expect(convert_basis(falling, Basis::Monomial) == p, "round trip failed at trial ", t);
        Rational x = random_rational(rng, 9, 4);
        prop.expect(p.eval(x) == falling.eval(x), "cross-basis eval failed at trial ", t);
    }
    return prop.finish();
}

// ----- oracle --------------------------------------------------------------

PropertyResult central_decomposition(unsigned trials, std::uint64_t seed) {
    Property prop("oracle.central-decomposition");
    SplitMix64 rng(seed);
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned s = 1; s <= std::min(n, 8u); ++s)
            for (unsigned k = 1; k <= std::min(n, 8u); ++k) {
                QPolynomial q = q_polynomial(s, k, n);
                for (unsigned t = 0; t < trials; ++t) {
                    NumberMultiset A = random_rational_multiset(rng, n, 3, 3);
                    Rational via_q = apply_q(q, power_sums(A, k));
                    Rational brute = power_sums(s_sums(A, s), k).p(k);
                    prop.expect(via_q == brute, "mismatch at s=", s, " k=", k, " n=", n, " trial=", t);
                    if (prop.failed()) return prop.finish();
                }
            }
    return prop.finish();
}

PropertyResult series_oracle(unsigned trials, std::uint64_t seed) {
    Property prop("oracle.generating-function");
    SplitMix64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::size_t n = 1 + rng.below(5);
        NumberMultiset A = random_rational_multiset(rng, n, 3, 2);
        prop.expect(series_lhs(A, 6, 6) == series_rhs(A, 6, 6), "tables differ at trial ", t, " n=", n);
    }
    return prop.finish();
}

PropertyResult newton_round_trips(unsigned trials, std::uint64_t seed) {
    Property prop("symfun.newton");
    SplitMix64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::size_t len = 1 + rng.below(10);
        std::vector<Rational> e;
        for (std::size_t i = 0; i < len; ++i) e.push_back(random_rational(rng, 9, 4));
        PowerSumVector p = newton_e_to_p(e);
        prop.expect(newton_p_to_e(p) == e, "e -> p -> e not identity at trial ", t);

        NumberMultiset A = random_rational_multiset(rng, 1 + rng.below(7), 5, 3);
        PowerSumVector ps = power_sums(A, A.size());
        std::vector<Rational> es = newton_p_to_e(ps);
        for (std::size_t k = 1; k <= A.size(); ++k)
            prop.expect(es[k - 1] == elementary_symmetric(A, k), "Newton e_k != direct e_k at trial ", t);
        prop.expect(newton_e_to_p(es).values == ps.values, "p -> e -> p not identity at trial ", t);
    }
    return prop.finish();
}

PropertyResult multiset_symmetries(unsigned trials, std::uint64_t seed) {
    Property prop("symfun.symmetries");
    SplitMix64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::size_t n = 2 + rng.below(6);
        NumberMultiset A = random_rational_multiset(rng, n, 5, 3);
        std::size_t s = 1 + rng.below(n);

        // Reflection
        std::vector<Rational> neg;
        for (const Rational& a : A.elements()) neg.push_back(Rational(-a));
        NumberMultiset negA(std::move(neg));
        NumberMultiset lhs = s_sums(negA, s);
        NumberMultiset As = s_sums(A, s);
        std::vector<Rational> neg_sums;
        for (const Rational& v : As.elements()) neg_sums.push_back(Rational(-v));
        prop.expect(lhs == NumberMultiset(std::move(neg_sums)), "reflection of s-sums fails at trial ", t);
        PowerSumVector pa = power_sums(A, n), pna = power_sums(negA, n);
        for (std::size_t k = 1; k <= n; ++k) {
            Rational expected = (k % 2 == 0) ? pa.p(k) : Rational(-pa.p(k));
            prop.expect(pna.p(k) == expected, "reflection of power sums fails at trial ", t, " k=", k);
        }

        // Complement
        if (s < n) {
            Rational total = pa.p(1);
            std::vector<Rational> complement;
            for (const Rational& v : As.elements()) complement.push_back(total - v);
            prop.expect(s_sums(A, n - s) == NumberMultiset(std::move(complement)),
                        "complement identity fails at trial ", t);
        }

        // Translation lemma
        Rational z = random_rational(rng, 5, 3);
        NumberMultiset shifted = translate(A, z);
        PowerSumVector pshift = power_sums(shifted, n);
        for (std::size_t k = 1; k <= n; ++k)
            prop.expect(translated_power_sum(pa, z, k) == pshift.p(k),
                        "translation lemma fails at trial ", t, " k=", k);
    }
    return prop.finish();
}

PropertyResult determination_property(unsigned trials, std::uint64_t seed) {
    Property prop("symfun.determination");
    SplitMix64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::size_t n = 1 + rng.below(7);
        NumberMultiset A = random_integer_multiset(rng, n, -6, 6);
        NumberMultiset B = random_integer_multiset(rng, n, -6, 6);
        bool same_power_sums = power_sums(A, n).values == power_sums(B, n).values;
        prop.expect(same_power_sums == (A == B), "determination fails at trial ", t);
    }
    return prop.finish();
}

PropertyResult roots_of_unity_checks() {
    Property prop("oracle.roots-of-unity");
    const double pi = 3.14159265358979323846;
    for (unsigned k = 1; k <= 8; ++k) {
        std::vector<std::complex<double>> zkk;
        for (unsigned m = 0; m < k; ++m)
            zkk.push_back(std::polar(1.0, 2.0 * pi * static_cast<double>(m) / static_cast<double>(k)));
        // p_j(Z_{n,k}) = k when k | j, else 0 (padding zeros change nothing).
        for (unsigned j = 1; j <= 2 * k; ++j) {
            double expected = (j % k == 0) ? static_cast<double>(k) : 0.0;
            prop.expect(std::abs(complex_power_sum(zkk, j) - expected) < 1e-6,
                        "power-sum pattern fails at k=", k, " j=", j);
        }
        // (-1)^(s-1) p_k(Z_kk^(s)) / k = <k-1, s-1>.
        for (unsigned s = 1; s <= k; ++s) {
            std::complex<double> pk = complex_power_sum(complex_s_sums(zkk, s), k);
            double value = ((s % 2 == 1) ? 1.0 : -1.0) * pk.real() / static_cast<double>(k);
            double expected = eulerian(k - 1, static_cast<long long>(s) - 1).get_d();
            prop.expect(std::abs(pk.imag()) < 1e-6 && std::abs(value - expected) < 1e-6,
                        "Eulerian consequence fails at k=", k, " s=", s);
        }
    }
    return prop.finish();
}

PropertyResult esym_checks(unsigned trials, std::uint64_t seed) {
    Property prop("symfun.esym-top-coefficient");
    for (auto [s, k, n] : {std::tuple<unsigned, unsigned, unsigned>{2, 2, 4}, {3, 3, 5}, {2, 3, 5}, {1, 3, 4}}) {
        EsymCheckReport report = esym_top_coefficient_check(s, k, n, std::max(1u, trials / 5), seed);
        prop.expect(report.passed && report.trials_run > 0, "check fails at s=", s, " k=", k, " n=", n,
                    " (nonconverged=", report.nonconverged, ")");
    }
    return prop.finish();
}

// ----- recovery ------------------------------------------------------------

PropertyResult solvability_spot_values() {
    Property prop("recovery.solvability");
    SolvabilityReport r42 = solvability(4, 2);
    prop.expect(r42.values == std::vector<BigInt>{3, 2, 0, -4} && r42.vanishing_k == std::vector<unsigned>{3} &&
                    !r42.solvable,
                "report for (4,2) wrong");
    SolvabilityReport r52 = solvability(5, 2);
    prop.expect(r52.values == std::vector<BigInt>{4, 3, 1, -3, -11} && r52.solvable, "report for (5,2) wrong");
    for (unsigned n = 1; n <= 9; ++n) {
        SolvabilityReport rn1 = solvability(n, 1);
        bool all_ones = true;
        for (const BigInt& v : rn1.values) all_ones = all_ones && v == 1;
        prop.expect(all_ones && rn1.solvable, "report for (", n, ",1) wrong");
    }
    return prop.finish();
}

PropertyResult recovery_round_trips(unsigned trials, std::uint64_t seed) {
    Property prop("recovery.round-trip");
    SplitMix64 rng(seed);
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned s = 1; s <= n; ++s) {
            if (!solvability(n, s).solvable) continue;
            for (unsigned t = 0; t < trials; ++t) {
                NumberMultiset A = (t % 2 == 0) ? random_integer_multiset(rng, n, -9, 9)
                                                : random_rational_multiset(rng, n, 9, 4);
                RecoveryResult result = recover(s_sums(A, s), n, s, RecoveryMode::Exact);
                prop.expect(result.multiset == A && result.residual == 0.0,
                            "round trip fails at n=", n, " s=", s, " trial=", t);
                if (prop.failed()) return prop.finish();
            }
        }
    return prop.finish();
}

PropertyResult numeric_recovery(unsigned trials, std::uint64_t seed) {
    Property prop("recovery.numeric");
    SplitMix64 rng(seed);
    const double sqrt2 = std::sqrt(2.0), sqrt3 = std::sqrt(3.0);
    for (unsigned t = 0; t < std::max(1u, trials / 5); ++t) {
        long scale = 1 + static_cast<long>(rng.below(3));
        std::vector<double> a{scale * sqrt2, -scale * sqrt2, scale * sqrt3, -scale * sqrt3,
                              static_cast<double>(rng.range(-3, 3))};
        unsigned n = static_cast<unsigned>(a.size()), s = 2;
        if (!solvability(n, s).solvable) continue;
        // Exact rational input from the double s-sums (each double is a rational).
        std::vector<std::complex<double>> ca(a.begin(), a.end());
        std::vector<Rational> sums;
        for (const auto& v : complex_s_sums(ca, s)) sums.emplace_back(v.real());
        RecoveryResult result = recover(NumberMultiset(std::move(sums)), n, s, RecoveryMode::Numeric, 1e-6);
        prop.expect(match_deviation(ca, result.approx) < 1e-6, "numeric recovery off at trial ", t);
    }
    return prop.finish();
}

PropertyResult ambiguity_search_checks() {
    Property prop("recovery.ambiguous-pairs");
    // The classic Moser pair and its in-range translate must be found.
    auto pairs42 = find_ambiguous_pairs(4, 2, 7, 1000);
    auto contains = [&](std::vector<long> a, std::vector<long> b) {
        std::vector<Rational> ar(a.begin(), a.end()), br(b.begin(), b.end());
        NumberMultiset A{ar}, B{br};
        for (const auto& [x, y] : pairs42)
            if ((x == A && y == B) || (x == B && y == A)) return true;
        return false;
    };
    prop.expect(contains({1, 4, 5, 6}, {2, 3, 4, 7}), "classic pair missing from (4,2) search");
    prop.expect(contains({0, 3, 4, 5}, {1, 2, 3, 6}), "zero-anchored pair missing from (4,2) search");

    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned s = 1; s <= n; ++s) {
            bool solvable = solvability(n, s).solvable;
            auto pairs = find_ambiguous_pairs(n, s, 6, 50000);
            if (solvable)
                prop.expect(pairs.empty(), "solvable (", n, ",", s, ") produced an ambiguous pair");
            else
                prop.count();
        }

    // Mechanism consistency: the recovery induction pins p_k while every
    // F_{s,i}(n) with i <= k is nonzero, so the first power-sum disagreement
    // of an ambiguous pair must land on a vanishing index.
    SolvabilityReport report = solvability(4, 2);
    for (const auto& [A, B] : pairs42) {
        PowerSumVector pa = power_sums(A, 4), pb = power_sums(B, 4);
        unsigned first_diff = 0;
        for (unsigned k = 1; k <= 4 && first_diff == 0; ++k)
            if (pa.p(k) != pb.p(k)) first_diff = k;
        prop.expect(first_diff != 0, "distinct multisets with identical first n power sums");
        prop.expect(first_diff != 0 && report.values[first_diff - 1] == 0,
                    "pair first disagrees at non-vanishing k=", first_diff);
    }
    return prop.finish();
}

PropertyResult negative_instance() {
    Property prop("recovery.negative-instance");
    std::vector<Rational> sums{5, 6, 7, 9, 10, 11};
    bool refused = false;
    std::vector<unsigned> vanishing;
    try {
        recover(NumberMultiset(std::move(sums)), 4, 2, RecoveryMode::Auto);
    } catch (const UnsolvableError& e) {
        refused = true;
        vanishing = e.report.vanishing_k;
    }
    prop.expect(refused && vanishing == std::vector<unsigned>{3}, "ambiguous witness not refused with k=3");
    return prop.finish();
}

}  // namespace

SuiteReport run_identities_suite(unsigned trials, std::uint64_t seed) {
    SuiteReport report;
    report.suite = "identities";
    report.properties.push_back(eulerian_triangle_checks());
    report.properties.push_back(knuth_identity());
    report.properties.push_back(form_agreement());
    report.properties.push_back(moser_identity_grid());
    report.properties.push_back(clambda_cross_checks());
    report.properties.push_back(moser_coefficient_checks());
    report.properties.push_back(qpolynomial_structure());
    report.properties.push_back(stirling_basis_consistency(trials, seed));
    return report;
}

SuiteReport run_oracle_suite(unsigned trials, std::uint64_t seed) {
    SuiteReport report;
    report.suite = "oracle";
    report.properties.push_back(central_decomposition(trials, seed));
    report.properties.push_back(series_oracle(trials, seed + 1));
    report.properties.push_back(newton_round_trips(trials, seed + 2));
    report.properties.push_back(multiset_symmetries(trials, seed + 3));
    report.properties.push_back(determination_property(trials, seed + 4));
    report.properties.push_back(roots_of_unity_checks());
    report.properties.push_back(esym_checks(trials, seed + 5));
    return report;
}

SuiteReport run_recovery_suite(unsigned trials, std::uint64_t seed) {
    SuiteReport report;
    report.suite = "recovery";
    report.properties.push_back(solvability_spot_values());
    report.properties.push_back(recovery_round_trips(std::max(1u, trials / 2), seed));
    report.properties.push_back(numeric_recovery(trials, seed + 1));
    report.properties.push_back(ambiguity_search_checks());
    report.properties.push_back(negative_instance());
    return report;
}

std::vector<SuiteReport> run_suites(const std::string& which, unsigned trials, std::uint64_t seed) {
    std::vector<SuiteReport> reports;
    if (which == "identities" || which == "all") reports.push_back(run_identities_suite(trials, seed));
    if (which == "oracle" || which == "all") reports.push_back(run_oracle_suite(trials, seed));
    if (which == "recovery" || which == "all") reports.push_back(run_recovery_suite(trials, seed));
    if (reports.empty()) throw std::invalid_argument("unknown suite: " + which);
    return reports;
}

}  // namespace moser
