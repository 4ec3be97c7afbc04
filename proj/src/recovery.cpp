#include "moser/recovery.hpp"

#include "moser/numeric.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace moser {

SolvabilityReport solvability(unsigned n, unsigned s) {
    if (s < 1 || s > n) throw std::invalid_argument("solvability requires 1 <= s <= n");
    SolvabilityReport report;
    report.n = n;
    report.s = s;
    for (unsigned k = 1; k <= n; ++k) {
        Rational v = moser_value(s, k, Rational(static_cast<long>(n)));
        report.values.push_back(v.get_num());  // integer at integer x
        if (v == 0) report.vanishing_k.push_back(k);
    }
    report.solvable = report.vanishing_k.empty();
    return report;
}

namespace {

std::string vanishing_message(const SolvabilityReport& report) {
    std::ostringstream oss;
    oss << "recovery from s-sums is not available for (n=" << report.n << ", s=" << report.s
        << "): F_{s,k}(n) vanishes at k =";
    for (unsigned k : report.vanishing_k) oss << ' ' << k;
    return oss.str();
}

}  // namespace

PowerSumVector recover_power_sums(const NumberMultiset& S, unsigned n, unsigned s) {
    if (BigInt(S.size()) != binom_uu(n, s)) throw std::invalid_argument("recover_power_sums: |S| must be C(n,s)");
    SolvabilityReport report = solvability(n, s);
    if (!report.solvable) throw UnsolvableError(report, vanishing_message(report));

    PowerSumVector sums_of_S = power_sums(S, n);
    PowerSumVector recovered;
    recovered.source_size = n;
    for (unsigned k = 1; k <= n; ++k) {
        QPolynomial q = q_polynomial(s, k, n);
        // Qtilde: every term except {k}, applied to p_1..p_{k-1}.
        Rational correction(0);
        const Partition top = Partition::single(k);
        for (const auto& [lam, coeff] : q.terms()) {
            if (lam == top) continue;
            Rational prod = Rational(coeff);
            for (unsigned part : lam.parts()) prod *= recovered.values[part - 1];
            correction += prod;
        }
        recovered.values.push_back((sums_of_S.p(k) - correction) / Rational(report.values[k - 1]));
    }
    return recovered;
}

namespace {

DensePolynomial monic_from_power_sums(const PowerSumVector& ps) {
    // x^n - e_1 x^(n-1) + e_2 x^(n-2) - ... + (-1)^n e_n
    std::vector<Rational> e = newton_p_to_e(ps);
    const std::size_t n = e.size();
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    for (std::size_t i = 1; i <= n; ++i) coeffs[n - i] = (i % 2 == 0) ? e[i - 1] : -e[i - 1];
    return DensePolynomial(std::move(coeffs));
}

}  // namespace

RecoveryResult recover(const NumberMultiset& S, unsigned n, unsigned s, RecoveryMode mode, double tol) {
    RecoveryResult result;
    result.power_sums = recover_power_sums(S, n, s);
    DensePolynomial poly = monic_from_power_sums(result.power_sums);

    if (mode == RecoveryMode::Exact || mode == RecoveryMode::Auto) {
        bool fell_through = false;
        RationalRootSplit split;
        try {
            split = rational_roots(poly);
        } catch (const std::overflow_error&) {
            // Divisor search blew the cap; auto mode falls back to numeric.
            if (mode == RecoveryMode::Exact) throw;
            fell_through = true;
        }
        if (!fell_through) {
            if (split.remainder.degree() > 0) {
                if (mode == RecoveryMode::Exact)
                    throw IrrationalRootsError("exact recovery failed: the recovered polynomial has irrational roots");
            } else {
                result.mode = RecoveryMode::Exact;
                result.multiset = NumberMultiset(std::move(split.roots));
                if (s_sums(result.multiset, s) != S)
                    throw VerificationError("exact recovery verification failed: recomputed s-sums differ");
                return result;
            }
        }
    }

    result.mode = RecoveryMode::Numeric;
    NumericRoots roots = roots_numeric(poly, std::min(tol, 1e-10));
    if (!roots.converged)
        throw RootConvergenceError("numeric recovery failed: root iteration did not converge");
    result.approx = roots.roots;

    std::vector<ComplexApprox> expected;
    expected.reserve(S.size());
    for (const Rational& v : S.elements()) expected.emplace_back(to_double(v), 0.0);
    result.residual = match_deviation(expected, complex_s_sums(result.approx, s));
    if (result.residual > tol)
        throw VerificationError("numeric recovery verification failed: matched s-sum deviation exceeds tolerance");
    return result;
}

std::vector<std::pair<NumberMultiset, NumberMultiset>> find_ambiguous_pairs(unsigned n, unsigned s,
                                                                            unsigned range_bound,
                                                                            std::size_t size_cap) {
    if (n < 1 || n > 8) throw std::invalid_argument("find_ambiguous_pairs guard: n <= 8");
    if (range_bound > 12) throw std::invalid_argument("find_ambiguous_pairs guard: range_bound <= 12");
    if (s < 1 || s > n) throw std::invalid_argument("find_ambiguous_pairs requires 1 <= s <= n");

    // Non-decreasing n-tuples over [0, range_bound], lexicographically; sums
    // stay tiny so plain ints suffice for the grouping key.
    std::vector<std::vector<int>> multisets;
    std::vector<int> current(n, 0);
    while (true) {
        multisets.push_back(current);
        std::size_t i = n;
        while (i > 0 && current[i - 1] == static_cast<int>(range_bound)) --i;
        if (i == 0) break;
        ++current[i - 1];
        for (std::size_t j = i; j < n; ++j) current[j] = current[i - 1];
    }

    std::map<std::vector<int>, std::vector<std::size_t>> by_sums;
    std::vector<std::size_t> idx(s);
    for (std::size_t mi = 0; mi < multisets.size(); ++mi) {
        const std::vector<int>& a = multisets[mi];
        std::vector<int> sums;
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            int sum = 0;
            for (std::size_t i : idx) sum += a[i];
            sums.push_back(sum);
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
        std::sort(sums.begin(), sums.end());
        by_sums[std::move(sums)].push_back(mi);
    }

    auto to_multiset = [](const std::vector<int>& values) {
        std::vector<Rational> elems;
        elems.reserve(values.size());
        for (int v : values) elems.emplace_back(v);
        return NumberMultiset(std::move(elems));
    };

    std::vector<std::pair<std::size_t, std::size_t>> pair_indices;
    for (const auto& [sums, members] : by_sums) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                pair_indices.emplace_back(members[i], members[j]);
    }
    std::sort(pair_indices.begin(), pair_indices.end());

    std::vector<std::pair<NumberMultiset, NumberMultiset>> out;
    for (const auto& [i, j] : pair_indices) {
        if (out.size() >= size_cap) break;
        out.emplace_back(to_multiset(multisets[i]), to_multiset(multisets[j]));
    }
    return out;
}

}  // namespace moser
