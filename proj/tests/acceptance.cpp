// Acceptance suite: one criterion per run entry, each printed as a PASS/FAIL
// line with its wall time. Exits nonzero when any criterion fails.

#include "moser/io.hpp"
#include "moser/moser.hpp"
#include "moser/numeric.hpp"
#include "moser/recovery.hpp"
#include "moser/sampling.hpp"
#include "moser/symfun.hpp"

#include "support.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace moser;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(std::string&)> run;  // appends a failure reason when failing
};

std::string cli_path() { return MOSER_CLI_PATH; }

void criterion_eulerian_golden(std::string& why) {
    testsupport::CommandResult r = testsupport::run_command(cli_path() + " table eulerian --rows 8");
    if (r.exit_code != 0) {
        why = "CLI exited " + std::to_string(r.exit_code);
        return;
    }
    const std::vector<std::vector<long long>> table{
        {1},
        {1, 1},
        {1, 4, 1},
        {1, 11, 11, 1},
        {1, 26, 66, 26, 1},
        {1, 57, 302, 302, 57, 1},
        {1, 120, 1191, 2416, 1191, 120, 1},
        {1, 247, 4293, 15619, 15619, 4293, 247, 1},
    };
    std::istringstream lines(r.output);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        if (n >= table.size()) {
            why = "extra output rows";
            return;
        }
        std::istringstream row(line);
        long long value;
        std::size_t m = 0;
        while (row >> value) {
            if (m >= table[n].size() || value != table[n][m]) {
                why = "entry mismatch at row " + std::to_string(n + 1);
                return;
            }
            ++m;
        }
        if (m != table[n].size()) {
            why = "row " + std::to_string(n + 1) + " has " + std::to_string(m) + " entries";
            return;
        }
        ++n;
    }
    if (n != 8) why = "expected 8 rows, saw " + std::to_string(n);
}

void criterion_central_decomposition(std::string& why) {
    SplitMix64 rng(20240201);
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned s = 1; s <= n; ++s)
            for (unsigned k = 1; k <= std::min(n, 6u); ++k) {
                QPolynomial q = q_polynomial(s, k, n);
                for (unsigned trial = 0; trial < 25; ++trial) {
                    NumberMultiset A = random_rational_multiset(rng, n, 4, 3);
                    if (apply_q(q, power_sums(A, k)) != power_sums(s_sums(A, s), k).p(k)) {
                        std::ostringstream oss;
                        oss << "mismatch at s=" << s << " k=" << k << " n=" << n << " trial=" << trial;
                        why = oss.str();
                        return;
                    }
                }
            }
}

void criterion_series_oracle(std::string& why) {
    SplitMix64 rng(7777);
    for (unsigned trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng.below(5);
        NumberMultiset A = random_rational_multiset(rng, n, 3, 2);
        if (!(series_lhs(A, 6, 6) == series_rhs(A, 6, 6))) {
            why = "tables differ at trial " + std::to_string(trial);
            return;
        }
    }
}

void criterion_form_agreement(std::string& why) {
    for (unsigned s = 1; s <= 8; ++s)
        for (unsigned k = 1; k <= 8; ++k)
            for (long twice_x = -10; twice_x <= 30; ++twice_x) {
                Rational x(twice_x, 2);
                x.canonicalize();
                Rational reference = moser_value(s, k, x);
                auto [st1, st2] = moser_value_stirling_forms(s, k, x);
                if (moser_value_eulerian_form(s, k, x) != reference || st1 != reference || st2 != reference) {
                    std::ostringstream oss;
                    oss << "form disagreement at s=" << s << " k=" << k << " x=" << to_string(x);
                    why = oss.str();
                    return;
                }
            }
}

void criterion_identity_suite(std::string& why) {
    for (unsigned s = 1; s <= 10 && why.empty(); ++s)
        for (unsigned k = 2; k <= 10; ++k)
            for (unsigned n = k; n <= 10; ++n)
                if (!check_duality(s, k, n)) {
                    why = "duality";
                    return;
                }
    for (unsigned s = 2; s <= 10; ++s)
        for (unsigned k = 1; k <= 10; ++k)
            for (unsigned n = 2; n <= 10; ++n)
                if (!check_recurrences(s, k, n)) {
                    why = "recurrences";
                    return;
                }
    for (unsigned s = 1; s <= 10; ++s)
        for (unsigned k = 1; k <= 10; ++k)
            for (unsigned d = 1; d <= 10; ++d)
                for (long x = -3; x <= 10; ++x)
                    if (!check_multistep(s, k, Rational(x), d)) {
                        why = "multistep";
                        return;
                    }
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned s = 0; s <= n; ++s)
            for (unsigned j = 0; j <= s; ++j)
                if (!check_binomial_identity(s, j, n)) {
                    why = "binomial identity";
                    return;
                }
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 0; k < n; ++k) {
            BigInt sum = 0;
            for (unsigned i = k; i < n; ++i) {
                BigInt term = binom_uu(i, k) * factorial(n - i) * stirling2(n, n - i);
                sum += (i - k) % 2 == 0 ? term : -term;
            }
            if (sum != eulerian(n, k)) {
                why = "Knuth identity";
                return;
            }
        }
    for (unsigned k = 1; k <= 10; ++k)
        for (unsigned s = 1; s <= 10; ++s)
            for (unsigned n = std::max(s, k); n <= 10; ++n)
                for (const Partition& lam : partitions_of(k))
                    if (c_lambda(s, k, n, lam) != c_lambda_alt(s, k, n, lam)) {
                        std::ostringstream oss;
                        oss << "c_lambda forms differ at s=" << s << " k=" << k << " n=" << n;
                        why = oss.str();
                        return;
                    }
}

void criterion_integrality_support(std::string& why) {
    // c_lambda asserts exact division internally; any remainder throws.
    for (unsigned k = 1; k <= 7; ++k)
        for (unsigned s = 1; s <= 7; ++s)
            for (unsigned n = std::max(s, k); n <= 9; ++n)
                for (const Partition& lam : partitions_of(k)) {
                    BigInt c;
                    try {
                        c = c_lambda(s, k, n, lam);
                    } catch (const std::exception& e) {
                        why = std::string("threw: ") + e.what();
                        return;
                    }
                    if (lam.length() > s && c != 0) {
                        std::ostringstream oss;
                        oss << "nonzero for long partition at s=" << s << " k=" << k << " n=" << n;
                        why = oss.str();
                        return;
                    }
                }
}

void criterion_recovery_round_trip(std::string& why) {
    SplitMix64 rng(4242);
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned s = 1; s <= n; ++s) {
            if (!solvability(n, s).solvable) continue;
            for (unsigned trial = 0; trial < 25; ++trial) {
                NumberMultiset A = random_integer_multiset(rng, n, -9, 9);
                RecoveryResult result = recover(s_sums(A, s), n, s, RecoveryMode::Exact);
                if (!(result.multiset == A) || result.residual != 0.0) {
                    std::ostringstream oss;
                    oss << "round trip failed at n=" << n << " s=" << s << " trial=" << trial;
                    why = oss.str();
                    return;
                }
            }
        }
}

void criterion_negative_instance(std::string& why) {
    testsupport::TempFile witness("[5,6,7,9,10,11]");
    testsupport::CommandResult r =
        testsupport::run_command(cli_path() + " recover " + witness.path() + " --n 4 --s 2");
    if (r.exit_code != 4) {
        why = "CLI exit was " + std::to_string(r.exit_code) + ", wanted 4";
        return;
    }
    nlohmann::json report = nlohmann::json::parse(r.output, nullptr, false);
    if (report.is_discarded() || report["vanishing_k"] != nlohmann::json::array({3})) {
        why = "vanishing_k not reported as [3]";
        return;
    }

    std::vector<Rational> a{1, 4, 5, 6}, b{2, 3, 4, 7};
    NumberMultiset A{a}, B{b};
    bool found = false;
    for (const auto& [x, y] : find_ambiguous_pairs(4, 2, 7, 100000))
        if ((x == A && y == B) || (x == B && y == A)) found = true;
    if (!found) why = "({1,4,5,6},{2,3,4,7}) not found by the ambiguity search";
}

void criterion_roots_of_unity(std::string& why) {
    const double pi = 3.14159265358979323846;
    for (unsigned k = 1; k <= 8; ++k) {
        std::vector<std::complex<double>> zkk;
        for (unsigned m = 0; m < k; ++m)
            zkk.push_back(std::polar(1.0, 2.0 * pi * static_cast<double>(m) / static_cast<double>(k)));
        for (unsigned j = 1; j <= 2 * k; ++j) {
            double expected = (j % k == 0) ? static_cast<double>(k) : 0.0;
            if (std::abs(complex_power_sum(zkk, j) - expected) >= 1e-6) {
                why = "p_j pattern fails at k=" + std::to_string(k) + " j=" + std::to_string(j);
                return;
            }
        }
        for (unsigned s = 1; s <= k; ++s) {
            std::complex<double> pk = complex_power_sum(complex_s_sums(zkk, s), k);
            if (k == 4 && s == 2 && std::abs(pk - std::complex<double>(-16.0, 0.0)) >= 1e-6) {
                why = "hand-checked p_4 at k=4, s=2 is not -16";
                return;
            }
            double value = ((s % 2 == 1) ? 1.0 : -1.0) * pk.real() / static_cast<double>(k);
            double expected = eulerian(k - 1, static_cast<long long>(s) - 1).get_d();
            if (std::abs(pk.imag()) >= 1e-6 || std::abs(value - expected) >= 1e-6) {
                why = "Eulerian value fails at k=" + std::to_string(k) + " s=" + std::to_string(s);
                return;
            }
        }
    }
}

void criterion_numeric_recovery(std::string& why) {
    const double sqrt2 = std::sqrt(2.0), sqrt3 = std::sqrt(3.0);
    const std::vector<std::vector<double>> cases{
        {sqrt2, -sqrt2, 1.0},
        {sqrt3, -sqrt3, 0.0, 2.0},  // (4,3) is solvable
        {sqrt2, -sqrt2, sqrt3, -sqrt3, 1.0},
    };
    const std::vector<unsigned> s_of{2, 3, 2};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        std::vector<std::complex<double>> A(cases[i].begin(), cases[i].end());
        unsigned n = static_cast<unsigned>(A.size()), s = s_of[i];
        std::vector<Rational> sums;
        for (const auto& v : complex_s_sums(A, s)) sums.emplace_back(v.real());
        RecoveryResult result = recover(NumberMultiset(std::move(sums)), n, s, RecoveryMode::Numeric, 1e-6);
        if (match_deviation(A, result.approx) >= 1e-6) {
            why = "case " + std::to_string(i) + " deviates beyond 1e-6";
            return;
        }
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"eulerian-golden-table", 1.0, criterion_eulerian_golden},
        {"central-decomposition", 60.0, criterion_central_decomposition},
        {"generating-function-oracle", 60.0, criterion_series_oracle},
        {"formula-cross-agreement", 10.0, criterion_form_agreement},
        {"identity-suite", 30.0, criterion_identity_suite},
        {"integrality-and-support", 30.0, criterion_integrality_support},
        {"recovery-round-trip", 120.0, criterion_recovery_round_trip},
        {"negative-instance", 60.0, criterion_negative_instance},
        {"roots-of-unity", 10.0, criterion_roots_of_unity},
        {"numeric-recovery", 10.0, criterion_numeric_recovery},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::string why;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(why);
        } catch (const std::exception& e) {
            why = std::string("unhandled exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (why.empty() && seconds > c.budget_seconds) {
            std::ostringstream oss;
            oss << "exceeded budget of " << c.budget_seconds << "s";
            why = oss.str();
        }
        std::printf("[%s] %02zu %s (%.2fs)%s%s\n", why.empty() ? "PASS" : "FAIL", i + 1, c.name.c_str(),
                    seconds, why.empty() ? "" : ": ", why.c_str());
        if (!why.empty()) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
