#pragma once

// Exact number types: big integers, rationals, Gaussian integers and
// rationals, and the scaled "(a + b i) * 2^p" input format.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Integer exponent vector; also used for lattice vectors and subgroup
/// directions.
using ExponentVector = std::vector<BigInt>;

/// Sorted, duplicate-free list of 0-based coordinate indices.
using IndexSet = std::vector<std::size_t>;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Number of bits in |x| (0 for x = 0).
std::size_t bit_length(const BigInt& x);

/// Bits needed to write q as numerator/denominator.
std::size_t bit_length(const Rational& q);

/// Exponent of 2 in x, x != 0.
std::size_t two_adic_valuation(const BigInt& x);

/// Rounds num/den to the nearest integer (ties toward +inf), den > 0.
BigInt round_div(const BigInt& num, const BigInt& den);

Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);
std::string to_string(const BigInt& x);
std::string to_string(const Rational& q);

struct GaussianInt {
    BigInt re;
    BigInt im;

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    BigInt norm() const { return re * re + im * im; }
    bool is_unit() const { return norm() == 1; }
    GaussianInt conj() const { return {re, -im}; }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

/// i^k for k taken mod 4.
GaussianInt gaussian_unit(int k);

/// Euclidean division with the quotient rounded to the nearest Gaussian
/// integer, so that N(remainder) <= N(divisor) / 2.
struct GaussianDivMod {
    GaussianInt quotient;
    GaussianInt remainder;
};
GaussianDivMod divmod(const GaussianInt& a, const GaussianInt& b);

/// a / b; throws std::domain_error unless b divides a.
GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b);

struct CanonicalAssociate {
    GaussianInt assoc;
    int unit_exp = 0;  // g = assoc * i^unit_exp
};

/// The associate of g in the quadrant {re > 0, im >= 0}; g must be nonzero.
CanonicalAssociate canonicalize_gaussian(const GaussianInt& g);

/// Canonical gcd in Z[i]; gcd(0, 0) = 0.
GaussianInt gcd(GaussianInt a, GaussianInt b);

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r, long i = 0) : re(r), im(i) {}
    GaussianRational(const GaussianInt& g) : re(g.re), im(g.im) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Rational norm() const { return re * re + im * im; }
    GaussianRational conj() const { return {re, -im}; }
    /// Throws std::domain_error on zero.
    GaussianRational inverse() const;

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
};

/// a^e by repeated squaring; negative e requires a != 0.
GaussianRational pow(const GaussianRational& a, long e);

/// Splits q = numerator / denominator with a Gaussian integer numerator and
/// a positive integer denominator (the lcm of the component denominators).
struct GaussianFraction {
    GaussianInt numerator;
    BigInt denominator;
};
GaussianFraction as_fraction(const GaussianRational& q);

std::string to_string(const GaussianRational& g);
GaussianRational parse_gaussian(std::string_view text);

/// (alpha + beta i) * 2^p.  Zero is always stored with p = 0.
class ScaledGaussian {
public:
    ScaledGaussian() = default;
    ScaledGaussian(GaussianRational mantissa, BigInt exponent = 0);
    ScaledGaussian(long re) : ScaledGaussian(GaussianRational(re)) {}

    /// 2^p with unit mantissa.
    static ScaledGaussian power_of_two(BigInt p);

    const GaussianRational& mantissa() const { return mantissa_; }
    const BigInt& exponent() const { return exponent_; }
    bool is_zero() const { return mantissa_.is_zero(); }

    /// Expands 2^p; throws std::overflow_error if |p| > max_shift.
    GaussianRational to_gaussian_rational(unsigned long max_shift = 1u << 16) const;

    /// Exact value equality (representations may differ).
    bool same_value(const ScaledGaussian& other) const;

    /// Representation equality.
    friend bool operator==(const ScaledGaussian&, const ScaledGaussian&) = default;
    friend ScaledGaussian operator*(const ScaledGaussian& a, const ScaledGaussian& b) {
        return {a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_};
    }

private:
    GaussianRational mantissa_;
    BigInt exponent_ = 0;
};

std::string to_string(const ScaledGaussian& a);
ScaledGaussian parse_scaled(std::string_view text);

/// q * 4^p, the squared modulus of a scaled Gaussian rational.
struct ScaledNorm {
    Rational q;
    BigInt p;
};

/// Exact three-way comparison of q1 * 4^p1 and q2 * 4^p2 (-1, 0, 1).
int compare(const ScaledNorm& a, const ScaledNorm& b);
inline bool operator==(const ScaledNorm& a, const ScaledNorm& b) { return compare(a, b) == 0; }
ScaledNorm operator*(const ScaledNorm& a, const ScaledNorm& b);

/// |a|^2 = (alpha^2 + beta^2) * 4^p.
ScaledNorm gaussian_norm_sq(const ScaledGaussian& a);

}  // namespace toric
