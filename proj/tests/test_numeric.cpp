#include "toric/numeric.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace toric;

namespace {

ScaledNorm norm_of(const char* text) { return gaussian_norm_sq(parse_scaled(text)); }

GaussianInt random_gaussian_int(oracle::Rng& rng, long bound) {
    return {BigInt(rng.uniform(-bound, bound)), BigInt(rng.uniform(-bound, bound))};
}

}  // namespace

TEST(GaussianNormSq, UnitSquareDiagonal) {
    const ScaledNorm n = norm_of("1+i");
    EXPECT_EQ(n.q, 2);
    EXPECT_EQ(n.p, 0);
}

TEST(GaussianNormSq, Zero) {
    const ScaledNorm n = norm_of("0");
    EXPECT_EQ(n.q, 0);
    EXPECT_EQ(n.p, 0);
}

TEST(GaussianNormSq, PythagoreanTripleOnUnitCircle) {
    const ScaledNorm n = norm_of("(3/5+4/5*i)*2^7");
    EXPECT_EQ(n.q, 1);
    EXPECT_EQ(n.p, 7);
}

TEST(GaussianNormSq, ComparesAcrossScales) {
    // 4 * 4^0 == 1 * 4^1, and 3 * 4^0 < 1 * 4^1.
    EXPECT_EQ(compare({Rational(4), 0}, {Rational(1), 1}), 0);
    EXPECT_EQ(compare({Rational(3), 0}, {Rational(1), 1}), -1);
    EXPECT_EQ(compare({Rational(1, 16), 3}, {Rational(4), 0}), 0);
    EXPECT_EQ(compare({Rational(0), 5}, {Rational(0), -2}), 0);
    EXPECT_EQ(compare({Rational(1), BigInt(1) << 300}, {Rational(1), (BigInt(1) << 300) - 1}), 1);
}

TEST(GaussianNormSq, Multiplicative) {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const ScaledGaussian a(rng.gaussian(9, 9), BigInt(rng.uniform(-40, 40)));
        const ScaledGaussian b(rng.gaussian(9, 9), BigInt(rng.uniform(-40, 40)));
        EXPECT_TRUE(gaussian_norm_sq(a * b) == gaussian_norm_sq(a) * gaussian_norm_sq(b))
            << to_string(a) << " * " << to_string(b);
    }
}

TEST(Canonicalize, One) {
    const auto c = canonicalize_gaussian(GaussianInt(1));
    EXPECT_EQ(c.assoc, GaussianInt(1));
    EXPECT_EQ(c.unit_exp, 0);
}

TEST(Canonicalize, I) {
    const auto c = canonicalize_gaussian(GaussianInt(0, 1));
    EXPECT_EQ(c.assoc, GaussianInt(1));
    EXPECT_EQ(c.unit_exp, 1);
}

TEST(Canonicalize, MinusThree) {
    const auto c = canonicalize_gaussian(GaussianInt(-3));
    EXPECT_EQ(c.assoc, GaussianInt(3));
    EXPECT_EQ(c.unit_exp, 2);
}

TEST(Canonicalize, RejectsZero) { EXPECT_THROW(canonicalize_gaussian(GaussianInt(0)), std::invalid_argument); }

TEST(Canonicalize, QuadrantRoundTripAndUnitInvariance) {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const GaussianInt g = random_gaussian_int(rng, 50);
        if (g.is_zero()) continue;
        const auto c = canonicalize_gaussian(g);
        EXPECT_GT(c.assoc.re, 0);
        EXPECT_GE(c.assoc.im, 0);
        EXPECT_GE(c.unit_exp, 0);
        EXPECT_LT(c.unit_exp, 4);
        EXPECT_EQ(c.assoc * gaussian_unit(c.unit_exp), g);
        const auto again = canonicalize_gaussian(c.assoc);
        EXPECT_EQ(again.assoc, c.assoc);
        EXPECT_EQ(again.unit_exp, 0);
        for (int k = 0; k < 4; ++k) EXPECT_EQ(canonicalize_gaussian(gaussian_unit(k) * g).assoc, c.assoc);
    }
}

TEST(GaussianArithmetic, DivmodRemainderIsSmall) {
    oracle::Rng rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const GaussianInt a = random_gaussian_int(rng, 1000);
        const GaussianInt b = random_gaussian_int(rng, 60);
        if (b.is_zero()) continue;
        const auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LE(2 * r.norm(), b.norm());
    }
}

TEST(GaussianArithmetic, ExactDivision) {
    EXPECT_EQ(exact_div(GaussianInt(0, 2), GaussianInt(1, 1)), GaussianInt(1, 1));
    EXPECT_THROW(exact_div(GaussianInt(3), GaussianInt(2)), std::domain_error);
}

TEST(GaussianArithmetic, GcdDividesBothAndIsCanonical) {
    oracle::Rng rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        const GaussianInt common = random_gaussian_int(rng, 8);
        const GaussianInt a = common * random_gaussian_int(rng, 20);
        const GaussianInt b = common * random_gaussian_int(rng, 20);
        const GaussianInt g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            EXPECT_TRUE(g.is_zero());
            continue;
        }
        EXPECT_GT(g.re, 0);
        EXPECT_GE(g.im, 0);
        EXPECT_TRUE(divmod(a, g).remainder.is_zero());
        EXPECT_TRUE(divmod(b, g).remainder.is_zero());
        if (!common.is_zero()) EXPECT_TRUE(divmod(g, common).remainder.is_zero());
    }
    EXPECT_EQ(gcd(GaussianInt(2), GaussianInt(1, 1)), GaussianInt(1, 1));
    EXPECT_EQ(gcd(GaussianInt(5), GaussianInt(2, 1)), GaussianInt(2, 1));
}

TEST(GaussianRationalOps, InverseAndPower) {
    const GaussianRational z(Rational(1), Rational(1));
    EXPECT_EQ(z * z.inverse(), GaussianRational(1));
    EXPECT_EQ(pow(z, 2), GaussianRational(0, 2));
    EXPECT_EQ(pow(z, -2), GaussianRational(Rational(0), Rational(-1, 2)));
    EXPECT_THROW(GaussianRational(0).inverse(), std::domain_error);
}

TEST(GaussianRationalOps, AsFraction) {
    const GaussianRational z(Rational(1, 6), Rational(-3, 4));
    const auto f = as_fraction(z);
    EXPECT_EQ(f.denominator, 12);
    EXPECT_EQ(f.numerator, GaussianInt(2, -9));
}

TEST(Format, PrintParseRoundTrip) {
    for (const char* text : {"0", "1", "-7", "i", "-i", "3/2*i", "1+i", "1-i", "-2/3+5/7*i", "4-1/2*i"}) {
        EXPECT_EQ(to_string(parse_gaussian(text)), text);
    }
    for (const char* text : {"2^5", "(1+i)*2^-3", "(-3)*2^100"}) {
        const ScaledGaussian a = parse_scaled(text);
        EXPECT_EQ(parse_scaled(to_string(a)), a) << text;
    }
    oracle::Rng rng(15);
    for (int trial = 0; trial < 300; ++trial) {
        const ScaledGaussian a(rng.gaussian(50, 50), BigInt(rng.uniform(-9, 9)));
        EXPECT_EQ(parse_scaled(to_string(a)), a) << to_string(a);
    }
}

TEST(Format, ParseErrors) {
    for (const char* text : {"", "x", "1+", "1/0", "2^", "(1+i)*2^x", "1 2"}) {
        EXPECT_THROW(parse_scaled(text), ParseError) << text;
    }
}

TEST(ScaledGaussianRep, CanonicalZeroAndValueEquality) {
    EXPECT_EQ(ScaledGaussian(GaussianRational(0), 17), ScaledGaussian());
    EXPECT_TRUE(ScaledGaussian(GaussianRational(4), 0).same_value(ScaledGaussian(GaussianRational(1), 2)));
    EXPECT_FALSE(ScaledGaussian(GaussianRational(4), 0) == ScaledGaussian(GaussianRational(1), 2));
    EXPECT_FALSE(ScaledGaussian(GaussianRational(3), 0).same_value(ScaledGaussian(GaussianRational(1), 2)));
    EXPECT_EQ(ScaledGaussian(GaussianRational(3), -1).to_gaussian_rational(), GaussianRational(Rational(3, 2)));
    EXPECT_THROW(ScaledGaussian::power_of_two(BigInt(1) << 40).to_gaussian_rational(), std::overflow_error);
}

TEST(Integers, BitLengthAndValuation) {
    EXPECT_EQ(bit_length(BigInt(0)), 0u);
    EXPECT_EQ(bit_length(BigInt(-8)), 4u);
    EXPECT_EQ(two_adic_valuation(BigInt(48)), 4u);
    EXPECT_EQ(round_div(BigInt(7), BigInt(2)), 4);
    EXPECT_EQ(round_div(BigInt(-7), BigInt(2)), -3);
    EXPECT_EQ(round_div(BigInt(-8), BigInt(3)), -3);
}
