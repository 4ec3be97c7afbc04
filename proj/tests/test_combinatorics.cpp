#include "moser/combinatorics.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace moser;

TEST_SUITE_BEGIN("combinatorics");

TEST_CASE("falling_power") {
    CHECK(falling_power(Rational(5), 3) == 60);
    CHECK(falling_power(Rational(7, 2), 0) == 1);
    CHECK(falling_power(Rational(3), 5) == 0);  // the (x-3) factor vanishes
    CHECK(falling_power(Rational(-1, 2), 2) == Rational(3, 4));
}

TEST_CASE("binomial with rational argument") {
    CHECK(binomial(Rational(5), 2) == 10);
    CHECK(binomial(Rational(4), -1) == 0);
    CHECK(binomial(Rational(-1), 3) == -1);  // (-1)(-2)(-3)/6
    CHECK(binomial(Rational(7, 2), 2) == Rational(35, 8));
    CHECK(binomial(Rational(3), 0) == 1);
}

TEST_CASE("Partition validates and exposes run lengths") {
    Partition lam({3, 3, 1});
    CHECK(lam.weight() == 7);
    CHECK(lam.length() == 3);
    CHECK(lam.multiplicities() == std::vector<unsigned>{2, 1});
    CHECK(Partition::single(4).parts() == std::vector<unsigned>{4});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({}), std::invalid_argument);
}

TEST_CASE("partitions_of enumerates in reverse-lexicographic order") {
    auto p1 = partitions_of(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].parts() == std::vector<unsigned>{1});

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<unsigned>{4});
    CHECK(p4[1].parts() == std::vector<unsigned>{3, 1});
    CHECK(p4[2].parts() == std::vector<unsigned>{2, 2});
    CHECK(p4[3].parts() == std::vector<unsigned>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<unsigned>{1, 1, 1, 1});

    CHECK(partitions_of(5).size() == 7);
}

TEST_CASE("partition counts and uniqueness against the DP oracle") {
    for (unsigned k = 1; k <= 12; ++k) {
        auto parts = partitions_of(k);
        CHECK(parts.size() == testsupport::partition_count_dp(k));
        std::set<std::vector<unsigned>> seen;
        for (const Partition& lam : parts) {
            CHECK(lam.weight() == k);
            seen.insert(lam.parts());
        }
        CHECK(seen.size() == parts.size());
    }
}

TEST_CASE("compositions_of enumerates lexicographically") {
    auto c42 = compositions_of(4, 2);
    REQUIRE(c42.size() == 3);
    CHECK(c42[0].parts == std::vector<unsigned>{1, 3});
    CHECK(c42[1].parts == std::vector<unsigned>{2, 2});
    CHECK(c42[2].parts == std::vector<unsigned>{3, 1});

    auto c33 = compositions_of(3, 3);
    REQUIRE(c33.size() == 1);
    CHECK(c33[0].parts == std::vector<unsigned>{1, 1, 1});

    CHECK(compositions_of(2, 3).empty());
}

TEST_CASE("composition counts match C(t-1, d-1)") {
    for (unsigned t = 1; t <= 12; ++t)
        for (unsigned d = 1; d <= 12; ++d) {
            auto cs = compositions_of(t, d);
            CHECK(BigInt(cs.size()) == binom_uu(t - 1, d - 1));
            for (const Composition& c : cs) CHECK(c.weight() == t);
        }
}

TEST_CASE("eulerian spot values from the triangle") {
    CHECK(eulerian(4, 1) == 11);
    CHECK(eulerian(8, 3) == 15619);
    CHECK(eulerian(5, 5) == 0);
    CHECK(eulerian(3, -1) == 0);
    CHECK(eulerian(0, 0) == 1);  // empty permutation
}

TEST_CASE("eulerian first eight rows, frozen") {
    const std::vector<std::vector<long>> table{
        {1},
        {1, 1},
        {1, 4, 1},
        {1, 11, 11, 1},
        {1, 26, 66, 26, 1},
        {1, 57, 302, 302, 57, 1},
        {1, 120, 1191, 2416, 1191, 120, 1},
        {1, 247, 4293, 15619, 15619, 4293, 247, 1},
    };
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned m = 0; m < n; ++m) CHECK(eulerian(n, m) == table[n - 1][m]);
}

TEST_CASE("eulerian properties vs the independent recurrence") {
    for (unsigned n = 0; n <= 12; ++n) {
        BigInt row_sum = n == 0 ? eulerian(0, 0) : BigInt(0);
        for (long long m = 0; m < static_cast<long long>(n); ++m) {
            row_sum += eulerian(n, m);
            CHECK(eulerian(n, m) == eulerian(n, static_cast<long long>(n) - 1 - m));
            CHECK(eulerian(n, m) == testsupport::eulerian_recurrence(n, m));
        }
        CHECK(row_sum == factorial(n));
    }
}

TEST_CASE("stirling1_unsigned") {
    CHECK(stirling1_unsigned(4, 2) == 11);
    CHECK(stirling1_unsigned(0, 0) == 1);
    CHECK(stirling1_unsigned(3, 0) == 0);
    CHECK(stirling1_unsigned(2, 5) == 0);
}

TEST_CASE("stirling1 is the falling-power basis change") {
    // x^[i] = sum_j (-1)^(i-j) c(i,j) x^j, against plain convolution.
    for (unsigned i = 0; i <= 10; ++i) {
        auto expanded = testsupport::falling_power_coefficients(i);
        for (unsigned j = 0; j <= i; ++j) {
            BigInt signed_coeff = stirling1_unsigned(i, j);
            if ((i - j) % 2 != 0) signed_coeff = -signed_coeff;
            CHECK(signed_coeff == expanded[j]);
        }
    }
}

TEST_CASE("stirling2 against the set-partition enumeration oracle") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(6, 6) == 1);
    CHECK(stirling2(3, 5) == 0);
    CHECK(stirling2(0, 0) == 1);
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; m <= n; ++m) CHECK(stirling2(n, m) == testsupport::stirling2_enumeration(n, m));
}

TEST_CASE("Knuth Eulerian-Stirling identity") {
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 0; k < n; ++k) {
            BigInt sum = 0;
            for (unsigned i = k; i < n; ++i) {
                BigInt term = binom_uu(i, k) * factorial(n - i) * stirling2(n, n - i);
                sum += (i - k) % 2 == 0 ? term : -term;
            }
            CHECK(sum == eulerian(n, k));
        }
}

TEST_SUITE_END();
