#include "moser/polynomial.hpp"

#include "moser/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moser {

DensePolynomial::DensePolynomial(std::vector<Rational> coeffs, Basis basis)
    : coeffs_(std::move(coeffs)), basis_(basis) {
    trim();
}

DensePolynomial DensePolynomial::constant(const Rational& c, Basis basis) {
    return DensePolynomial(std::vector<Rational>{c}, basis);
}

void DensePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational DensePolynomial::eval(const Rational& x) const {
    if (coeffs_.empty()) return Rational(0);
    Rational acc = coeffs_.back();
    if (basis_ == Basis::Monomial) {
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
    } else {
        // sum b_j x^[j] = b_0 + x (b_1 + (x-1)(b_2 + (x-2)(...)))
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * (x - Rational(static_cast<long>(i))) + coeffs_[i];
    }
    return acc;
}

ComplexApprox DensePolynomial::eval(const ComplexApprox& x) const {
    if (basis_ != Basis::Monomial) throw std::logic_error("complex eval requires monomial basis");
    ComplexApprox acc(0.0, 0.0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + ComplexApprox(to_double(coeffs_[i]), 0.0);
    return acc;
}

DensePolynomial DensePolynomial::operator+(const DensePolynomial& other) const {
    if (basis_ != other.basis_ && !is_zero() && !other.is_zero())
        throw std::logic_error("polynomial addition requires matching bases");
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return DensePolynomial(std::move(out), is_zero() ? other.basis_ : basis_);
}

DensePolynomial DensePolynomial::operator-(const DensePolynomial& other) const {
    return *this + (-other);
}

DensePolynomial DensePolynomial::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return DensePolynomial(std::move(out), basis_);
}

DensePolynomial DensePolynomial::operator*(const DensePolynomial& other) const {
    if (is_zero() || other.is_zero()) return DensePolynomial({}, Basis::Monomial);
    if (basis_ != Basis::Monomial || other.basis_ != Basis::Monomial)
        throw std::logic_error("polynomial multiplication requires monomial basis");
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return DensePolynomial(std::move(out), Basis::Monomial);
}

DensePolynomial DensePolynomial::operator*(const Rational& scalar) const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c *= scalar;
    return DensePolynomial(std::move(out), basis_);
}

DensePolynomial convert_basis(const DensePolynomial& p, Basis target) {
    if (p.basis() == target || p.is_zero()) return DensePolynomial(p.coefficients(), target);
    std::vector<Rational> out(p.coefficients().size(), Rational(0));
    if (target == Basis::Monomial) {
        // x^[i] = sum_j (-1)^(i-j) c(i,j) x^j with unsigned Stirling-1 c.
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
            if (p.coefficients()[i] == 0) continue;
            for (std::size_t j = 0; j <= i; ++j) {
                Rational term = p.coefficients()[i] * Rational(stirling1_unsigned(i, j));
                if ((i - j) % 2 == 0)
                    out[j] += term;
                else
                    out[j] -= term;
            }
        }
    } else {
        // x^n = sum_m S(n,m) x^[m].
        for (std::size_t n = 0; n < p.coefficients().size(); ++n) {
            if (p.coefficients()[n] == 0) continue;
            for (std::size_t m = 0; m <= n; ++m) out[m] += p.coefficients()[n] * Rational(stirling2(n, m));
        }
    }
    return DensePolynomial(std::move(out), target);
}

NumericRoots roots_numeric(const DensePolynomial& p, double tol) {
    if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("roots_numeric requires degree >= 1");
    if (p.basis() != Basis::Monomial) throw std::invalid_argument("roots_numeric requires monomial basis");
    const std::size_t d = static_cast<std::size_t>(p.degree());

    // Monic double coefficients.
    std::vector<double> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i) c[i] = to_double(p.coefficient(i) / p.coefficient(d));
    auto eval_monic = [&](ComplexApprox x) {
        ComplexApprox acc(0.0, 0.0);
        for (std::size_t i = d + 1; i-- > 0;) acc = acc * x + c[i];
        return acc;
    };

    // Starting points on a circle of radius given by the Cauchy bound,
    // rotated off the axes so real-root symmetry cannot lock the iteration.
    double radius = 0.0;
    for (std::size_t i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;
    const double pi = 3.14159265358979323846;
    std::vector<ComplexApprox> z(d);
    for (std::size_t i = 0; i < d; ++i) {
        double angle = 2.0 * pi * static_cast<double>(i) / static_cast<double>(d) + 0.4;
        z[i] = std::polar(radius, angle);
    }

    NumericRoots result;
    const unsigned max_iters = 1000;
    bool blew_up = false;
    for (unsigned iter = 1; iter <= max_iters && !blew_up; ++iter) {
        double max_move = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            ComplexApprox denom(1.0, 0.0);
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                ComplexApprox diff = z[i] - z[j];
                if (std::abs(diff) == 0.0) diff = ComplexApprox(1e-14, 1e-14);
                denom *= diff;
            }
            ComplexApprox delta = eval_monic(z[i]) / denom;
            ComplexApprox next = z[i] - delta;
            if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) {
                // Keep the last finite iterate; report non-convergence.
                blew_up = true;
                break;
            }
            z[i] = next;
            max_move = std::max(max_move, std::abs(delta));
        }
        result.iterations = iter;
        if (!blew_up && max_move < tol) {
            result.converged = true;
            break;
        }
    }

    result.roots = z;
    result.residuals.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        double r = std::abs(eval_monic(z[i]));
        result.residuals[i] = std::isfinite(r) ? r : std::numeric_limits<double>::max();
    }
    return result;
}

namespace {

// Synthetic division by (x - r), in place; false (no mutation) when the
// remainder is nonzero.
bool deflate(std::vector<Rational>& coeffs, const Rational& r) {
    std::vector<Rational> q(coeffs.size() - 1);
    Rational carry = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = coeffs[i] + carry * r;
    }
    if (carry != 0) return false;
    coeffs = std::move(q);
    return true;
}

// All positive divisors of |z| (z != 0). Throws std::overflow_error when the
// factorization cannot be completed by trial division or the divisor count
// would explode.
std::vector<BigInt> positive_divisors(const BigInt& z, std::size_t cap) {
    BigInt n = abs(z);
    std::vector<std::pair<BigInt, unsigned>> factors;
    const unsigned long trial_limit = 1000000;
    for (unsigned long p = 2; BigInt(p) * p <= n && p <= trial_limit; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(BigInt(p), e);
        }
    }
    if (n > 1) {
        // No factor <= 10^6 remains; the cofactor is prime iff below 10^12.
        if (n > BigInt(trial_limit) * trial_limit)
            throw std::overflow_error("rational_roots: divisor search exceeds factoring bound");
        factors.emplace_back(n, 1);
    }
    std::size_t count = 1;
    for (const auto& [f, e] : factors) {
        count *= e + 1;
        if (count > cap) throw std::overflow_error("rational_roots: divisor candidate cap exceeded");
    }
    std::vector<BigInt> divisors{BigInt(1)};
    for (const auto& [f, e] : factors) {
        std::size_t base = divisors.size();
        BigInt power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= f;
            for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * power);
        }
    }
    return divisors;
}

}  // namespace

RationalRootSplit rational_roots(const DensePolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots requires a nonzero polynomial");
    if (p.basis() != Basis::Monomial) throw std::invalid_argument("rational_roots requires monomial basis");

    std::vector<Rational> coeffs = p.coefficients();
    std::vector<Rational> roots;

    // Zero roots come off first so the constant term is nonzero below.
    while (coeffs.size() > 1 && coeffs.front() == 0) {
        roots.emplace_back(0);
        coeffs.erase(coeffs.begin());
    }

    if (coeffs.size() > 1) {
        // Integer-scale: candidates are (divisor of constant)/(divisor of leading).
        BigInt scale = 1;
        for (const auto& c : coeffs) {
            BigInt l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
            scale = l;
        }
        BigInt a0 = Rational(coeffs.front() * Rational(scale)).get_num();
        BigInt ad = Rational(coeffs.back() * Rational(scale)).get_num();

        const std::size_t cap = 1000000;
        std::vector<BigInt> ps = positive_divisors(a0, cap);
        std::vector<BigInt> qs = positive_divisors(ad, cap);
        if (ps.size() * qs.size() > cap) throw std::overflow_error("rational_roots: divisor candidate cap exceeded");

        std::vector<Rational> candidates;
        candidates.reserve(2 * ps.size() * qs.size());
        for (const auto& num : ps)
            for (const auto& den : qs) {
                Rational r(num, den);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        auto horner = [](const std::vector<Rational>& cs, const Rational& x) {
            Rational acc = 0;
            for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
            return acc;
        };
        for (const auto& cand : candidates) {
            while (coeffs.size() > 1 && horner(coeffs, cand) == 0) {
                if (!deflate(coeffs, cand)) throw std::logic_error("rational_roots: deflation left a remainder");
                roots.push_back(cand);
            }
        }
    }

    std::sort(roots.begin(), roots.end());
    return RationalRootSplit{std::move(roots), DensePolynomial(std::move(coeffs))};
}

}  // namespace moser
