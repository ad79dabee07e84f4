#include "toric/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace toric {

namespace {

// Drops whitespace around operators; whitespace between two digits or
// letters would silently merge tokens, so it is rejected.
std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool gap = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            gap = !out.empty();
            continue;
        }
        if (gap && std::isalnum(static_cast<unsigned char>(ch)) && std::isalnum(static_cast<unsigned char>(out.back()))) {
            throw ParseError("unexpected space in '" + std::string(text) + "'");
        }
        gap = false;
        out.push_back(ch);
    }
    return out;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

// 2^k as a rational, k of either sign.
Rational pow2(long k) {
    Rational r = 1;
    if (k >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    }
    return r;
}

// q = odd * 2^k with odd having no factor two in numerator or denominator.
struct TwoAdicSplit {
    Rational odd;
    BigInt shift;
};

TwoAdicSplit split_two_adic(const Rational& q, const BigInt& extra_shift) {
    const std::size_t vn = two_adic_valuation(q.get_num());
    const std::size_t vd = two_adic_valuation(q.get_den());
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    mpz_fdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), vn);
    mpz_fdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), vd);
    Rational odd(num, den);
    odd.canonicalize();
    return {odd, extra_shift + BigInt(static_cast<unsigned long>(vn)) -
                     BigInt(static_cast<unsigned long>(vd))};
}

}  // namespace

std::size_t bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t bit_length(const Rational& q) {
    return bit_length(q.get_num()) + bit_length(q.get_den());
}

std::size_t two_adic_valuation(const BigInt& x) {
    if (x == 0) throw std::domain_error("2-adic valuation of zero");
    return mpz_scan1(x.get_mpz_t(), 0);
}

BigInt round_div(const BigInt& num, const BigInt& den) {
    BigInt q;
    BigInt twice = 2 * num + den;
    BigInt twice_den = 2 * den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
    return q;
}

BigInt parse_integer(std::string_view text) {
    std::string s = strip_spaces(text);
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) throw ParseError("invalid integer '" + std::string(text) + "'");
    BigInt value(std::string(digits), 10);
    return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
    std::string s = strip_spaces(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    BigInt num = parse_integer(std::string_view(s).substr(0, slash));
    std::string_view den_text = std::string_view(s).substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("invalid denominator in '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianInt gaussian_unit(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

GaussianDivMod divmod(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::domain_error("Gaussian division by zero");
    const BigInt n = b.norm();
    const GaussianInt t = a * b.conj();
    GaussianInt q{round_div(t.re, n), round_div(t.im, n)};
    GaussianInt r = a - q * b;
    return {std::move(q), std::move(r)};
}

GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Gaussian division is not exact");
    return q;
}

CanonicalAssociate canonicalize_gaussian(const GaussianInt& g) {
    if (g.is_zero()) throw std::invalid_argument("canonicalize_gaussian: zero has no associate class");
    GaussianInt a = g;
    int k = 0;
    // Multiplying by -i rotates clockwise by a quarter turn.
    while (!(a.re > 0 && a.im >= 0)) {
        a = GaussianInt(a.im, -a.re);
        ++k;
    }
    return {std::move(a), k};
}

GaussianInt gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        GaussianInt r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return canonicalize_gaussian(a).assoc;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    const Rational n = norm();
    return {re / n, -im / n};
}

GaussianRational pow(const GaussianRational& a, long e) {
    GaussianRational base = e < 0 ? a.inverse() : a;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    GaussianRational result(1);
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

GaussianFraction as_fraction(const GaussianRational& q) {
    BigInt den;
    mpz_lcm(den.get_mpz_t(), q.re.get_den_mpz_t(), q.im.get_den_mpz_t());
    GaussianInt num{q.re.get_num() * (den / q.re.get_den()), q.im.get_num() * (den / q.im.get_den())};
    return {std::move(num), std::move(den)};
}

std::string to_string(const GaussianRational& g) {
    if (g.im == 0) return to_string(g.re);
    std::string imag;
    const Rational mag = abs(g.im);
    imag = mag == 1 ? "i" : to_string(mag) + "*i";
    if (g.re == 0) return (g.im < 0 ? "-" : "") + imag;
    return to_string(g.re) + (g.im < 0 ? "-" : "+") + imag;
}

GaussianRational parse_gaussian(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty number");
    if (s.find_first_of("()^") != std::string::npos) {
        throw ParseError("unexpected character in Gaussian rational '" + s + "'");
    }

    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }

    GaussianRational out;
    bool seen_re = false;
    bool seen_im = false;
    auto absorb = [&](std::string_view term) {
        if (term.empty()) throw ParseError("malformed Gaussian rational '" + s + "'");
        if (term.back() == 'i') {
            if (seen_im) throw ParseError("two imaginary parts in '" + s + "'");
            seen_im = true;
            term.remove_suffix(1);
            if (!term.empty() && term.back() == '*') term.remove_suffix(1);
            if (term.empty() || term == "+") {
                out.im = 1;
            } else if (term == "-") {
                out.im = -1;
            } else {
                out.im = parse_rational(term);
            }
        } else {
            if (seen_re) throw ParseError("two real parts in '" + s + "'");
            seen_re = true;
            out.re = parse_rational(term);
        }
    };

    const std::string_view view = s;
    if (split == std::string::npos) {
        absorb(view);
    } else {
        absorb(view.substr(0, split));
        absorb(view.substr(split));
    }
    return out;
}

ScaledGaussian::ScaledGaussian(GaussianRational mantissa, BigInt exponent)
    : mantissa_(std::move(mantissa)), exponent_(std::move(exponent)) {
    // Callers may hand in unreduced fractions such as 6/2.
    mantissa_.re.canonicalize();
    mantissa_.im.canonicalize();
    if (mantissa_.is_zero()) exponent_ = 0;
}

ScaledGaussian ScaledGaussian::power_of_two(BigInt p) { return {GaussianRational(1), std::move(p)}; }

GaussianRational ScaledGaussian::to_gaussian_rational(unsigned long max_shift) const {
    if (exponent_ == 0) return mantissa_;
    if (abs(exponent_) > max_shift) throw std::overflow_error("power-of-two exponent too large to expand");
    const Rational scale = pow2(exponent_.get_si());
    return {mantissa_.re * scale, mantissa_.im * scale};
}

bool ScaledGaussian::same_value(const ScaledGaussian& other) const {
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    if (!(gaussian_norm_sq(*this) == gaussian_norm_sq(other))) return false;
    // Equal moduli bound the exponent gap by the mantissa sizes.
    const BigInt delta = exponent_ - other.exponent_;
    const Rational scale = pow2(delta.get_si());
    return GaussianRational(mantissa_.re * scale, mantissa_.im * scale) == other.mantissa_;
}

std::string to_string(const ScaledGaussian& a) {
    if (a.exponent() == 0) return to_string(a.mantissa());
    return "(" + to_string(a.mantissa()) + ")*2^" + to_string(a.exponent());
}

ScaledGaussian parse_scaled(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.rfind("2^", 0) == 0) return ScaledGaussian::power_of_two(parse_integer(s.substr(2)));
    const auto mark = s.rfind("*2^");
    if (mark == std::string::npos) return ScaledGaussian(parse_gaussian(s));
    std::string_view mant = std::string_view(s).substr(0, mark);
    if (mant.size() >= 2 && mant.front() == '(' && mant.back() == ')') {
        mant = mant.substr(1, mant.size() - 2);
    }
    return {parse_gaussian(mant), parse_integer(std::string_view(s).substr(mark + 3))};
}

int compare(const ScaledNorm& a, const ScaledNorm& b) {
    const int sa = sgn(a.q);
    const int sb = sgn(b.q);
    if (sa != sb || sa == 0) return sa < sb ? -1 : (sa > sb ? 1 : 0);

    const TwoAdicSplit x = split_two_adic(abs(a.q), 2 * a.p);
    const TwoAdicSplit y = split_two_adic(abs(b.q), 2 * b.p);
    const BigInt delta = x.shift - y.shift;
    int magnitude;
    if (delta == 0) {
        magnitude = cmp(x.odd, y.odd);
    } else {
        // |log2 odd| < bit_length(num) + bit_length(den), so a large gap decides.
        const std::size_t slack = bit_length(x.odd) + bit_length(y.odd) + 2;
        if (delta > slack) {
            magnitude = 1;
        } else if (delta < -static_cast<long>(slack)) {
            magnitude = -1;
        } else {
            magnitude = cmp(x.odd * pow2(delta.get_si()), y.odd);
        }
    }
    magnitude = magnitude < 0 ? -1 : (magnitude > 0 ? 1 : 0);
    return sa > 0 ? magnitude : -magnitude;
}

ScaledNorm operator*(const ScaledNorm& a, const ScaledNorm& b) { return {a.q * b.q, a.p + b.p}; }

ScaledNorm gaussian_norm_sq(const ScaledGaussian& a) {
    return {a.mantissa().norm(), a.exponent()};
}

}  // namespace toric
