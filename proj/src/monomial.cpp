#include "toric/monomial.hpp"

#include <stdexcept>
#include <utility>

namespace toric {

namespace {

struct Power {
    GaussianInt base;  // canonical associate, never a unit
    BigInt exponent;   // positive
};

// One side of the equation: prod base^exponent * i^units.
struct Side {
    std::vector<Power> powers;
    BigInt units = 0;

    void multiply(const GaussianInt& g, const BigInt& e) {
        if (e == 0) return;
        const CanonicalAssociate c = canonicalize_gaussian(g);
        units += e * c.unit_exp;
        if (c.assoc.is_unit()) return;
        for (auto& p : powers) {
            if (p.base == c.assoc) {
                p.exponent += e;
                return;
            }
        }
        powers.push_back({c.assoc, e});
    }

    BigInt norm_product() const {
        BigInt p = 1;
        for (const auto& f : powers) p *= f.base.norm();
        return p;
    }
};

// Places g^e on `self` when e > 0, else g^-e on `other`.
void place(Side& self, Side& other, const GaussianInt& g, const BigInt& e) {
    if (e > 0) {
        self.multiply(g, e);
    } else if (e < 0) {
        other.multiply(g, -e);
    }
}

bool is_zero_product(const MonomialProduct& side) {
    bool zero = false;
    for (const auto& f : side) {
        if (!f.base.is_zero()) continue;
        if (f.exponent < 0) throw std::domain_error("product_equal: zero base with negative exponent");
        if (f.exponent > 0) zero = true;
    }
    return zero;
}

// Moves factors of `src` onto (self, other) as Gaussian integers; the 2^p
// parts accumulate into two_exp with the given sign.
void absorb(const MonomialProduct& src, Side& self, Side& other, BigInt& two_exp, int sign) {
    for (const auto& f : src) {
        if (f.exponent == 0 || f.base.is_zero()) continue;
        two_exp += sign * f.exponent * f.base.exponent();
        const GaussianFraction frac = as_fraction(f.base.mantissa());
        place(self, other, frac.numerator, f.exponent);
        if (frac.denominator != 1) place(other, self, GaussianInt(frac.denominator), f.exponent);
    }
}

}  // namespace

bool product_equal(const MonomialProduct& lhs, const MonomialProduct& rhs, CancellationTrace* trace) {
    const bool lhs_zero = is_zero_product(lhs);
    const bool rhs_zero = is_zero_product(rhs);
    if (lhs_zero || rhs_zero) return lhs_zero && rhs_zero;

    Side left, right;
    BigInt two_exp = 0;
    absorb(lhs, left, right, two_exp, 1);
    absorb(rhs, right, left, two_exp, -1);
    place(left, right, GaussianInt(2), two_exp);

    if (trace) trace->norm_products.push_back(left.norm_product() * right.norm_product());

    for (;;) {
        std::size_t li = 0, ri = 0;
        GaussianInt common;
        bool found = false;
        for (li = 0; li < left.powers.size() && !found; ++li) {
            for (ri = 0; ri < right.powers.size(); ++ri) {
                common = gcd(left.powers[li].base, right.powers[ri].base);
                if (!common.is_unit()) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) break;
        --li;

        Power a = std::move(left.powers[li]);
        Power b = std::move(right.powers[ri]);
        left.powers.erase(left.powers.begin() + static_cast<std::ptrdiff_t>(li));
        right.powers.erase(right.powers.begin() + static_cast<std::ptrdiff_t>(ri));

        // a^e = d^e (a/d)^e and b^f = d^f (b/d)^f; cancel d^min(e,f).
        left.multiply(exact_div(a.base, common), a.exponent);
        right.multiply(exact_div(b.base, common), b.exponent);
        place(left, right, common, a.exponent - b.exponent);

        if (trace) {
            trace->divisor_norms.push_back(common.norm());
            trace->norm_products.push_back(left.norm_product() * right.norm_product());
        }
    }

    if (!left.powers.empty() || !right.powers.empty()) return false;
    BigInt diff = left.units - right.units;
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), diff.get_mpz_t(), 4);
    return r == 0;
}

MonomialProduct monomial_at(std::span<const ScaledGaussian> point, const ExponentVector& c) {
    if (point.size() != c.size()) {
        throw std::invalid_argument("monomial_at: point has " + std::to_string(point.size()) +
                                    " coordinates, exponent vector has " + std::to_string(c.size()));
    }
    MonomialProduct out;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) out.push_back({point[j], c[j]});
    return out;
}

bool monomial_values_equal(std::span<const ScaledGaussian> v, std::span<const ScaledGaussian> w,
                           const ExponentVector& c) {
    return product_equal(monomial_at(v, c), monomial_at(w, c));
}

GaussianRational evaluate_monomial_exact(std::span<const GaussianRational> bases, const ExponentVector& c,
                                         unsigned long cap) {
    if (bases.size() != c.size()) throw std::invalid_argument("evaluate_monomial_exact: length mismatch");
    BigInt total = 0;
    for (const auto& e : c) total += abs(e);
    if (total > cap) {
        throw std::length_error("evaluate_monomial_exact: total exponent " + total.get_str() +
                                " exceeds cap " + std::to_string(cap));
    }
    GaussianRational value(1);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        if (c[j] < 0 && bases[j].is_zero()) {
            throw std::domain_error("evaluate_monomial_exact: zero raised to a negative power");
        }
        value = value * pow(bases[j], c[j].get_si());
    }
    return value;
}

}  // namespace toric
