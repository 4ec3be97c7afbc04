#pragma once

#include "moser/numbers.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace moser {

enum class Basis { Monomial, FallingFactorial };

using ComplexApprox = std::complex<double>;

// Univariate polynomial with exact rational coefficients, stored densely by
// degree in either the monomial basis {x^j} or the falling-factorial basis
// {x^[j]}. Canonical form: no trailing zero coefficients.
class DensePolynomial {
public:
    DensePolynomial() : basis_(Basis::Monomial) {}
    explicit DensePolynomial(std::vector<Rational> coeffs, Basis basis = Basis::Monomial);

    static DensePolynomial constant(const Rational& c, Basis basis = Basis::Monomial);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Basis basis() const { return basis_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    // Exact Horner-style evaluation in the polynomial's own basis.
    Rational eval(const Rational& x) const;
    // Double-precision evaluation; monomial basis only.
    ComplexApprox eval(const ComplexApprox& x) const;

    DensePolynomial operator+(const DensePolynomial& other) const;
    DensePolynomial operator-(const DensePolynomial& other) const;
    DensePolynomial operator*(const DensePolynomial& other) const;  // monomial basis only
    DensePolynomial operator*(const Rational& scalar) const;
    DensePolynomial operator-() const;

    bool operator==(const DensePolynomial& other) const = default;

private:
    void trim();

    std::vector<Rational> coeffs_;  // index = degree
    Basis basis_;
};

// Re-expresses the same polynomial function in the target basis, exactly,
// via the Stirling-number change-of-basis matrices.
DensePolynomial convert_basis(const DensePolynomial& p, Basis target);

struct NumericRoots {
    std::vector<ComplexApprox> roots;  // degree-many, with multiplicity
    std::vector<double> residuals;     // |p(root)| per root, monic-normalized
    bool converged = false;
    unsigned iterations = 0;
};

// Durand-Kerner simultaneous iteration from perturbed-circle starting points.
// Stops when the largest per-root movement drops below tol, or after 1000
// iterations; a non-converged result still carries the best iterate and its
// residuals. Requires a nonzero monomial-basis polynomial of degree >= 1.
NumericRoots roots_numeric(const DensePolynomial& p, double tol);

struct RationalRootSplit {
    std::vector<Rational> roots;  // with multiplicity, ascending
    DensePolynomial remainder;    // has no rational roots; product of (x - r) times this reconstructs p
};

// Exhaustive rational-root deflation via the rational-root theorem on the
// integer-scaled polynomial. Divisor enumeration is capped; pathological
// constant/leading terms raise std::overflow_error.
RationalRootSplit rational_roots(const DensePolynomial& p);

}  // namespace moser
