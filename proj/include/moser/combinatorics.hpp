#pragma once

#include "moser/numbers.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace moser {

// Integer partition: non-increasing positive parts. Immutable after
// construction; the constructor validates.
class Partition {
public:
    explicit Partition(std::vector<unsigned> parts);

    static Partition single(unsigned k) { return Partition({k}); }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }

    // Run lengths of equal parts, e.g. {3,3,1} -> {2,1}.
    std::vector<unsigned> multiplicities() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

// Ordered sequence of positive parts with a fixed sum.
struct Composition {
    std::vector<unsigned> parts;

    unsigned weight() const {
        unsigned w = 0;
        for (unsigned p : parts) w += p;
        return w;
    }

    bool operator==(const Composition&) const = default;
};

// x^[p] = x(x-1)...(x-p+1); the empty product for p = 0.
Rational falling_power(const Rational& x, unsigned p);

// C(x, j) = x^[j]/j! for j >= 0, and 0 for j < 0. x may be any rational.
Rational binomial(const Rational& x, long j);

// All partitions of k, reverse-lexicographic on the part sequences:
// partitions_of(4) = {4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}.
std::vector<Partition> partitions_of(unsigned k);

// All length-d sequences of positive integers summing to t, in
// lexicographic order; empty when d > t. Count is C(t-1, d-1).
std::vector<Composition> compositions_of(unsigned t, unsigned d);

// Eulerian number <n,m> by the explicit alternating-binomial formula.
// Zero outside the triangle (m < 0 or m >= n), except <0,0> = 1.
BigInt eulerian(unsigned long n, long long m);

// Unsigned Stirling numbers of the first kind, by the recurrence
// c(i,j) = c(i-1,j-1) + (i-1) c(i-1,j), c(0,0) = 1.
BigInt stirling1_unsigned(unsigned long i, unsigned long j);

// Stirling numbers of the second kind, by the explicit formula
// S(n,m) = (1/m!) sum_j (-1)^(m-j) C(m,j) j^n; the division is exact.
BigInt stirling2(unsigned long n, unsigned long m);

}  // namespace moser
