#include "moser/recovery.hpp"

#include "moser/numeric.hpp"
#include "moser/sampling.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace moser;

namespace {

NumberMultiset ints(std::vector<long> values) {
    std::vector<Rational> out(values.begin(), values.end());
    return NumberMultiset(std::move(out));
}

}  // namespace

TEST_SUITE_BEGIN("recovery");

TEST_CASE("solvability reports") {
    SolvabilityReport r42 = solvability(4, 2);
    CHECK(r42.values == std::vector<BigInt>{3, 2, 0, -4});
    CHECK(r42.vanishing_k == std::vector<unsigned>{3});
    CHECK_FALSE(r42.solvable);

    SolvabilityReport r52 = solvability(5, 2);
    CHECK(r52.values == std::vector<BigInt>{4, 3, 1, -3, -11});
    CHECK(r52.vanishing_k.empty());
    CHECK(r52.solvable);

    SolvabilityReport r71 = solvability(7, 1);
    CHECK(r71.values == std::vector<BigInt>(7, BigInt(1)));
    CHECK(r71.solvable);

    CHECK_THROWS_AS(solvability(3, 4), std::invalid_argument);
}

TEST_CASE("solvability verdict matches the vanishing pattern everywhere") {
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned s = 1; s <= n; ++s) {
            SolvabilityReport report = solvability(n, s);
            bool any_zero = false;
            for (unsigned k = 1; k <= n; ++k) {
                Rational direct = moser_value(s, k, Rational(static_cast<long>(n)));
                CHECK(Rational(report.values[k - 1]) == direct);
                if (direct == 0) any_zero = true;
            }
            CHECK(report.solvable == !any_zero);
            CHECK(report.solvable == report.vanishing_k.empty());
        }
}

TEST_CASE("recover_power_sums on the worked instance") {
    NumberMultiset A = ints({1, 2, 3, 4, 6});
    PowerSumVector p = recover_power_sums(s_sums(A, 2), 5, 2);
    CHECK(p.values == std::vector<Rational>{16, 66, 316, 1650, 9076});
    CHECK(p.values == power_sums(A, 5).values);

    // n = s = 1: the single sum is the element.
    PowerSumVector single = recover_power_sums(NumberMultiset({Rational(7, 2)}), 1, 1);
    CHECK(single.values == std::vector<Rational>{Rational(7, 2)});
}

TEST_CASE("recover_power_sums rejects bad input") {
    CHECK_THROWS_AS(recover_power_sums(ints({1, 2, 3}), 5, 2), std::invalid_argument);  // |S| != C(5,2)
    CHECK_THROWS_AS(recover_power_sums(ints({5, 6, 7, 9, 10, 11}), 4, 2), UnsolvableError);
}

TEST_CASE("exact recovery round trip") {
    NumberMultiset A = ints({1, 2, 3, 4, 6});
    RecoveryResult result = recover(s_sums(A, 2), 5, 2, RecoveryMode::Exact);
    CHECK(result.mode == RecoveryMode::Exact);
    CHECK(result.multiset == A);
    CHECK(result.residual == 0.0);
    CHECK(result.power_sums.values == power_sums(A, 5).values);
}

TEST_CASE("degenerate multiset of zeros") {
    NumberMultiset zeros = ints({0, 0, 0});
    RecoveryResult result = recover(s_sums(zeros, 2), 3, 2, RecoveryMode::Auto);
    CHECK(result.mode == RecoveryMode::Exact);
    CHECK(result.multiset == zeros);
}

TEST_CASE("the ambiguous witness is refused") {
    bool caught = false;
    try {
        recover(ints({5, 6, 7, 9, 10, 11}), 4, 2, RecoveryMode::Auto);
    } catch (const UnsolvableError& e) {
        caught = true;
        CHECK(e.report.vanishing_k == std::vector<unsigned>{3});
    }
    CHECK(caught);
}

TEST_CASE("inconsistent input: exact refuses the roots, numeric fails verification") {
    // At (5,2) this S pins small rational power sums whose quintic has
    // irrational roots; and since C(5,2) = 10 > 5, S is overdetermined and is
    // not the 2-sum multiset of anything, so the numeric path must refuse it
    // after re-checking the sums.
    NumberMultiset S = ints({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK_THROWS_AS(recover(S, 5, 2, RecoveryMode::Exact), IrrationalRootsError);
    CHECK_THROWS_AS(recover(S, 5, 2, RecoveryMode::Numeric, 1e-6), VerificationError);
    CHECK_THROWS_AS(recover(S, 5, 2, RecoveryMode::Auto, 1e-6), VerificationError);
}

TEST_CASE("numeric mode recovers irrational multisets from rounded s-sums") {
    // {sqrt2, -sqrt2, 1}: feed the double-rounded 2-sums as exact rationals.
    const double sqrt2 = std::sqrt(2.0);
    std::vector<std::complex<double>> A{{sqrt2, 0.0}, {-sqrt2, 0.0}, {1.0, 0.0}};
    std::vector<Rational> sums;
    for (const auto& v : complex_s_sums(A, 2)) sums.emplace_back(v.real());
    NumberMultiset S(std::move(sums));

    RecoveryResult numeric = recover(S, 3, 2, RecoveryMode::Numeric, 1e-6);
    CHECK(numeric.mode == RecoveryMode::Numeric);
    CHECK(numeric.residual <= 1e-6);
    CHECK(match_deviation(A, numeric.approx) < 1e-6);

    // Auto falls through to numeric whichever way the exact attempt fails.
    RecoveryResult out = recover(S, 3, 2, RecoveryMode::Auto, 1e-6);
    CHECK(out.mode == RecoveryMode::Numeric);
    CHECK(match_deviation(A, out.approx) < 1e-6);
}

TEST_CASE("round trips across every solvable pair up to n = 6") {
    SplitMix64 rng(1001);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned s = 1; s <= n; ++s) {
            if (!solvability(n, s).solvable) continue;
            for (int trial = 0; trial < 5; ++trial) {
                NumberMultiset A = (trial % 2 == 0) ? random_integer_multiset(rng, n, -9, 9)
                                                    : random_rational_multiset(rng, n, 9, 4);
                RecoveryResult result = recover(s_sums(A, s), n, s, RecoveryMode::Exact);
                CHECK(result.multiset == A);
            }
        }
}

TEST_CASE("find_ambiguous_pairs locates the classic pair") {
    // 25 pairs live in the [0,7] box for (4,2); the classic pair sits at
    // lexicographic position 16, right after its zero-anchored translate.
    auto pairs = find_ambiguous_pairs(4, 2, 7, 1000);
    CHECK(pairs.size() == 25);
    bool found_classic = false, found_anchored = false;
    for (const auto& [a, b] : pairs) {
        if (a == ints({1, 4, 5, 6}) && b == ints({2, 3, 4, 7})) found_classic = true;
        if (a == ints({0, 3, 4, 5}) && b == ints({1, 2, 3, 6})) found_anchored = true;
    }
    CHECK(found_classic);
    CHECK(found_anchored);
}

TEST_CASE("no ambiguous pairs for solvable parameters") {
    CHECK(find_ambiguous_pairs(5, 2, 7, 10).empty());
    CHECK(find_ambiguous_pairs(3, 2, 5, 10).empty());
}

TEST_CASE("size_cap truncates deterministically") {
    auto all_pairs = find_ambiguous_pairs(4, 2, 6, 100000);
    REQUIRE(all_pairs.size() > 1);
    auto capped = find_ambiguous_pairs(4, 2, 6, 1);
    REQUIRE(capped.size() == 1);
    CHECK(capped[0].first == all_pairs[0].first);
    CHECK(capped[0].second == all_pairs[0].second);
}

TEST_CASE("guards on the ambiguity search") {
    CHECK_THROWS_AS(find_ambiguous_pairs(9, 2, 5, 10), std::invalid_argument);
    CHECK_THROWS_AS(find_ambiguous_pairs(4, 2, 13, 10), std::invalid_argument);
    CHECK_THROWS_AS(find_ambiguous_pairs(4, 5, 6, 10), std::invalid_argument);
}

TEST_SUITE_END();
