#include <gtest/gtest.h>

#include <random>

#include "qhurwitz/errors.hpp"
#include "qhurwitz/params.hpp"
#include "qhurwitz/poly.hpp"
#include "qhurwitz/scalar.hpp"
#include "qhurwitz/zseries.hpp"

using namespace qhurwitz;

namespace {

const Context QT{Param::q, Param::t};
Scalar q() { return Scalar::param(QT, Param::q); }
Scalar t() { return Scalar::param(QT, Param::t); }

Poly random_poly(std::mt19937_64& rng, Context ctx, int terms, int maxdeg) {
    std::uniform_int_distribution<int> coeff(-9, 9), deg(0, maxdeg);
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (Param p : ctx.params()) m = m * Monomial::of(p, static_cast<unsigned>(deg(rng)));
        ts.push_back({m, Rational(coeff(rng))});
    }
    return Poly::from_terms(ctx, ts);
}

} // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
    EXPECT_EQ(Rational::parse("-7").to_string(), "-7");
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_THROW(Rational::parse("1/0"), error);
    EXPECT_THROW(Rational::parse("abc"), error);
}

TEST(Scalar, CanonicalStrings) {
    EXPECT_EQ((Scalar(1) + q()).to_string(), "1 + q");
    EXPECT_EQ(((Scalar(1) - t()) / (Scalar(1) - q())).to_string(), "(1 - t)/(1 - q)");
    EXPECT_EQ((Scalar(1) / (q() * Scalar(2))).to_string(), "1/(2*q)");
    EXPECT_EQ((Scalar(-1) / (Scalar(1) - q())).to_string(), "-1/(1 - q)");
    EXPECT_EQ((q() / (Scalar(1) - q())).to_string(), "q/(1 - q)");
    EXPECT_EQ(Scalar(Rational(1, 2)).to_string(), "1/2");
    // Representation does not depend on how the fraction was built.
    Scalar a = (Scalar(1) - q() * q()) / (Scalar(1) - q());
    EXPECT_EQ(a, Scalar(1) + q());
    Scalar b = (Scalar(2) - Scalar(2) * t()) / (Scalar(4) - Scalar(4) * q());
    EXPECT_EQ(b.to_string(), "(1 - t)/(2 - 2*q)");
}

TEST(Scalar, ParseRoundTrip) {
    for (const char* text : {"(1 - t)/(1 - q)", "1/(2*q)", "q/(1 - q)", "1 + q^2*t", "-3/7"}) {
        Scalar s = Scalar::parse(text, QT);
        EXPECT_EQ(s.to_string(), text);
        EXPECT_EQ(Scalar::parse(s.to_string(), QT), s);
    }
    EXPECT_EQ(Scalar::parse("2q t", QT), Scalar(2) * q() * t());
    EXPECT_EQ(Scalar::parse("q^-2", QT), (q() * q()).inverse());
    EXPECT_THROW(Scalar::parse("(1 + q", QT), parse_error);
}

TEST(Scalar, FieldAxiomsAtRandom) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Scalar a = Scalar::fraction(random_poly(rng, QT, 3, 2), random_poly(rng, QT, 3, 2) + Poly::constant(QT, 11));
        Scalar b = Scalar::fraction(random_poly(rng, QT, 3, 2), random_poly(rng, QT, 2, 2) + Poly::constant(QT, 13));
        Scalar c = Scalar::fraction(random_poly(rng, QT, 2, 3), Poly::constant(QT, 5));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
        // Evaluation is a ring homomorphism.
        Assignment at{{Param::q, Rational(2, 7)}, {Param::t, Rational(-3, 5)}};
        try {
            EXPECT_EQ((a * b + c).eval(at), a.eval(at) * b.eval(at) + c.eval(at));
        } catch (const evaluation_pole&) {
        }
    }
}

TEST(Scalar, EvaluationPoleAndDivisionByZero) {
    Scalar f = Scalar(1) / (Scalar(1) - q());
    EXPECT_THROW(f.eval({{Param::q, Rational(1)}, {Param::t, Rational(0)}}), evaluation_pole);
    EXPECT_THROW(Scalar(1) / Scalar(0), division_by_zero);
    EXPECT_EQ(f.eval({{Param::q, Rational(1, 3)}, {Param::t, Rational(0)}}), Rational(3, 2));
}

TEST(Scalar, ContextRules) {
    Scalar a = Scalar::param(Context{Param::q}, Param::q);
    Scalar b = Scalar::param(Context{Param::alpha}, Param::alpha);
    EXPECT_THROW(a + b, context_mismatch);
    EXPECT_NO_THROW(a + Scalar(1));
    EXPECT_EQ((q() * t()).substitute({{Param::t, Scalar::param(Context{Param::q}, Param::q)}}, Context{Param::q}).to_string(), "q^2");
}

TEST(Scalar, CoefficientsIn) {
    Scalar f = (Scalar(1) - t() * t()) / (Scalar(1) - q());
    auto c = f.coefficients_in(Param::t);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0].to_string(), "1/(1 - q)");
    EXPECT_TRUE(c[1].is_zero());
    EXPECT_EQ(c[2].to_string(), "-1/(1 - q)");
    EXPECT_THROW((Scalar(1) / (Scalar(1) - t())).coefficients_in(Param::t), error);
}

TEST(Gcd, HeuristicAgreesWithSubresultant) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Poly g = random_poly(rng, QT, 3, 2);
        Poly a = random_poly(rng, QT, 3, 2) * g;
        Poly b = random_poly(rng, QT, 3, 2) * g;
        Poly h = gcd(a, b), r = gcd_subresultant(a, b);
        EXPECT_EQ(h, r);
        if (!g.is_zero() && !a.is_zero() && !b.is_zero()) {
            // The constructed common factor divides the computed gcd.
            EXPECT_TRUE(divide_exact(h, g).has_value());
            EXPECT_TRUE(divide_exact(a, h).has_value());
            EXPECT_TRUE(divide_exact(b, h).has_value());
        }
    }
}

TEST(Gcd, KnownCases) {
    Poly x = Poly::variable(QT, Param::q), y = Poly::variable(QT, Param::t);
    Poly one = Poly::constant(QT, 1);
    EXPECT_EQ(gcd(x * x - one, x - one), one - x);
    EXPECT_EQ(gcd(x * y, y * y), y);
    EXPECT_EQ(gcd(x + one, y + one), one);
    EXPECT_EQ(gcd(Poly(QT), x), x);
}

TEST(ZSeries, ArithmeticAndInverse) {
    ZSeries a = ZSeries::from_coeffs({Scalar(1), q(), Scalar(2)}, 4);
    ZSeries inv = a.inverse();
    EXPECT_EQ(a * inv, ZSeries::constant(Scalar(1), 4));
    ZSeries b = ZSeries::from_coeffs({Scalar(1), Scalar(1)}, 4);
    ZSeries s = b.scale_argument(Scalar(3));
    EXPECT_EQ(s[1], Scalar(3));
    EXPECT_THROW(a + ZSeries(2), order_mismatch);
    EXPECT_THROW(ZSeries::from_coeffs({Scalar(0), Scalar(1)}, 2).inverse(), error);
}

TEST(ParamSpace, RandomPointsAvoidSpecialValues) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        ParamSpace ps = ParamSpace::random_point(QT, rng);
        ASSERT_TRUE(ps.is_numeric());
        for (Param p : {Param::q, Param::t}) {
            Rational v = *ps.value(p).constant_value();
            EXPECT_FALSE(v.is_zero());
            EXPECT_NE(v, Rational(1));
            EXPECT_NE(v, Rational(-1));
            EXPECT_LE(v.denominator(), 10000);
        }
    }
    ParamSpace a;
    ParamSpace b = a.bound(Param::t, q());
    EXPECT_NE(a.key(), b.key());
}
