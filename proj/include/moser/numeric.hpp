#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

namespace moser {

// Double-precision counterparts of the exact multiset operations, for the
// root-finding paths and the roots-of-unity oracles.

// All sums over strictly increasing index s-tuples.
inline std::vector<std::complex<double>> complex_s_sums(const std::vector<std::complex<double>>& values,
                                                        std::size_t s) {
    const std::size_t n = values.size();
    if (s < 1 || s > n) throw std::invalid_argument("complex_s_sums requires 1 <= s <= n");
    std::vector<std::complex<double>> out;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        std::complex<double> sum(0.0, 0.0);
        for (std::size_t i : idx) sum += values[i];
        out.push_back(sum);
        std::size_t i = s;
        while (i-- > 0) {
            if (idx[i] != i + n - s) break;
            if (i == 0) return out;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::complex<double> complex_power_sum(const std::vector<std::complex<double>>& values, unsigned k) {
    std::complex<double> total(0.0, 0.0);
    for (const auto& v : values) {
        std::complex<double> p(1.0, 0.0);
        for (unsigned i = 0; i < k; ++i) p *= v;
        total += p;
    }
    return total;
}

// e_k via the coefficients of prod (1 + v t), truncated at degree k.
inline std::complex<double> complex_elementary_symmetric(const std::vector<std::complex<double>>& values,
                                                         std::size_t k) {
    if (k > values.size()) throw std::invalid_argument("elementary symmetric order exceeds multiset size");
    std::vector<std::complex<double>> e(k + 1, {0.0, 0.0});
    e[0] = {1.0, 0.0};
    std::size_t filled = 0;
    for (const auto& v : values) {
        filled = std::min(filled + 1, k);
        for (std::size_t j = filled; j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e[k];
}

// Greedy nearest-neighbour assignment after sorting both sides by
// (real, imag); returns the largest matched distance. Heuristic, adequate for
// well-separated desk-scale data.
inline double match_deviation(std::vector<std::complex<double>> expected,
                              std::vector<std::complex<double>> actual) {
    if (expected.size() != actual.size()) throw std::invalid_argument("match_deviation: size mismatch");
    auto lex = [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    };
    std::sort(expected.begin(), expected.end(), lex);
    std::sort(actual.begin(), actual.end(), lex);
    std::vector<bool> used(actual.size(), false);
    double worst = 0.0;
    for (const auto& e : expected) {
        std::size_t best = actual.size();
        double best_dist = 0.0;
        for (std::size_t i = 0; i < actual.size(); ++i) {
            if (used[i]) continue;
            double dist = std::abs(e - actual[i]);
            if (best == actual.size() || dist < best_dist) {
                best = i;
                best_dist = dist;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

}  // namespace moser
