#pragma once

#include "moser/rng.hpp"
#include "moser/symfun.hpp"

#include <vector>

namespace moser {

// Deterministic test-data generators; every randomized suite routes its draws
// through these so a seed pins the exact cases.

inline Rational random_rational(SplitMix64& rng, long bound, unsigned long max_den) {
    Rational q(rng.range(-bound, bound), static_cast<long>(rng.below(max_den) + 1));
    q.canonicalize();
    return q;
}

inline NumberMultiset random_rational_multiset(SplitMix64& rng, std::size_t n, long bound,
                                               unsigned long max_den) {
    std::vector<Rational> elements;
    elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) elements.push_back(random_rational(rng, bound, max_den));
    return NumberMultiset(std::move(elements));
}

inline NumberMultiset random_integer_multiset(SplitMix64& rng, std::size_t n, long lo, long hi) {
    std::vector<Rational> elements;
    elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) elements.emplace_back(rng.range(lo, hi));
    return NumberMultiset(std::move(elements));
}

}  // namespace moser
