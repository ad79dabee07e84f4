#pragma once

// Equality of products of powers of (scaled) Gaussian rationals, decided
// without expanding any power.

#include "toric/numeric.hpp"

#include <span>
#include <vector>

namespace toric {

struct Factor {
    ScaledGaussian base;
    BigInt exponent;
};

/// prod base^exponent.  A zero base may only carry a nonnegative exponent.
using MonomialProduct = std::vector<Factor>;

/// Per-step record of the gcd cancellation, for auditing termination.
struct CancellationTrace {
    /// Product of the norms of all non-unit bases on both sides, before the
    /// first step and after each step.
    std::vector<BigInt> norm_products;
    /// N(d) for the common divisor d removed at each step.
    std::vector<BigInt> divisor_norms;
};

/// True iff both products denote the same complex number.
///
/// Denominators are moved across, the 2^p parts of every base are folded
/// into one power of two with exponent sum(e_j p_j), and every base is
/// replaced by its canonical associate while the unit i^k it drops is
/// tallied mod 4.  Then, while some base on the left and some base on the
/// right share a non-unit gcd d, d is cancelled from both:
///   a^e b^f  ->  (a/d)^e d^(e-f) | (b/d)^f     (e >= f)
/// Bit cost is polynomial in the input size even for huge exponents.
///
/// Throws std::domain_error for a zero base with a negative exponent.
bool product_equal(const MonomialProduct& lhs, const MonomialProduct& rhs,
                   CancellationTrace* trace = nullptr);

/// The factors of x^c evaluated at point: prod point_j^c_j.
MonomialProduct monomial_at(std::span<const ScaledGaussian> point, const ExponentVector& c);

/// x^c(v) == x^c(w), via product_equal.
bool monomial_values_equal(std::span<const ScaledGaussian> v, std::span<const ScaledGaussian> w,
                           const ExponentVector& c);

/// Direct evaluation of prod bases_j^c_j.  Only for small exponents: throws
/// std::length_error when sum |c_j| exceeds cap, std::domain_error on zero to
/// a negative power.
GaussianRational evaluate_monomial_exact(std::span<const GaussianRational> bases, const ExponentVector& c,
                                         unsigned long cap = 64);

}  // namespace toric
