#include <gtest/gtest.h>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/symfunc.hpp"

using namespace qhurwitz;

namespace {

const Context QT{Param::q, Param::t};
Scalar q() { return Scalar::param(QT, Param::q); }
Scalar t() { return Scalar::param(QT, Param::t); }

} // namespace

TEST(SymFunc, PowerSumToMonomial) {
    SymFunc p2 = SymFunc::element(Basis::p, {2}).convert(Basis::m);
    EXPECT_EQ(p2.coeff({2}), Scalar(1));
    EXPECT_TRUE(p2.coeff({1, 1}).is_zero());
    SymFunc p11 = SymFunc::element(Basis::p, {1, 1}).convert(Basis::m);
    EXPECT_EQ(p11.coeff({2}), Scalar(1));
    EXPECT_EQ(p11.coeff({1, 1}), Scalar(2));
}

TEST(SymFunc, SchurFromCharacters) {
    SymFunc s = SymFunc::element(Basis::s, {1, 1}).convert(Basis::p);
    EXPECT_EQ(s.coeff({1, 1}), Scalar(Rational(1, 2)));
    EXPECT_EQ(s.coeff({2}), Scalar(Rational(-1, 2)));
    // Evaluating s_λ at (1,...,1) with m ones counts semistandard tableaux.
    std::vector<Rational> ones(3, Rational(1));
    EXPECT_EQ(SymFunc::element(Basis::s, {2, 1}).eval(ones), Scalar(8));
    EXPECT_EQ(SymFunc::element(Basis::s, {1, 1, 1}).eval(ones), Scalar(1));
}

TEST(SymFunc, ScalarProduct) {
    SymFunc p1 = SymFunc::element(Basis::p, {1});
    EXPECT_EQ(scalar_product_qt(p1, p1).to_string(), "(1 - q)/(1 - t)");
    EXPECT_TRUE(scalar_product_qt(SymFunc::element(Basis::p, {2}), SymFunc::element(Basis::p, {1, 1})).is_zero());
}

TEST(SymFunc, MacdonaldDegreeTwo) {
    SymFunc P2 = macdonald_P({2});
    Scalar K = (Scalar(1) + q()) * (Scalar(1) - t()) / (Scalar(1) - q() * t());
    EXPECT_EQ(P2.coeff({2}), Scalar(1));
    EXPECT_EQ(P2.coeff({1, 1}), K);
    SymFunc P11 = macdonald_P({1, 1});
    EXPECT_EQ(P11.coeff({1, 1}), Scalar(1));
    EXPECT_TRUE(P11.coeff({2}).is_zero());
    // b_λ is the reciprocal norm.
    EXPECT_EQ(macdonald_b({2}) * scalar_product_qt(P2, P2), Scalar(1));
}

TEST(SymFunc, MacdonaldAtQEqualsTIsSchur) {
    ParamSpace ps(Context{Param::q});
    ps.bind(Param::t, Scalar::param(Context{Param::q}, Param::q));
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            SymFunc P = macdonald_P(l, ps).convert(Basis::p);
            SymFunc s = SymFunc::element(Basis::s, l, ps).convert(Basis::p);
            for (const auto& mu : enumerate_partitions(n)) EXPECT_EQ(P.coeff(mu), s.coeff(mu));
        }
}

TEST(SymFunc, MacdonaldAtQZeroSchurTZero) {
    // P_λ(q=0,t=0) = s_λ.
    ParamSpace ps{Context{}};
    ps.bind(Param::q, Scalar(0)).bind(Param::t, Scalar(0));
    for (const auto& l : enumerate_partitions(4)) {
        SymFunc P = macdonald_P(l, ps).convert(Basis::p);
        SymFunc s = SymFunc::element(Basis::s, l, ps).convert(Basis::p);
        for (const auto& mu : enumerate_partitions(4)) EXPECT_EQ(P.coeff(mu), s.coeff(mu));
    }
}

TEST(SymFunc, GSeriesValues) {
    ZSeries g = g_j_series({Rational(1)}, 2);
    EXPECT_EQ(g[0], Scalar(1));
    EXPECT_EQ(g[1].to_string(), "(1 - t)/(1 - q)");
    Scalar g2 = (Scalar(1) - t() * t()) / (Scalar(2) * (Scalar(1) - q() * q())) +
                (Scalar(1) - t()) * (Scalar(1) - t()) / (Scalar(2) * (Scalar(1) - q()) * (Scalar(1) - q()));
    EXPECT_EQ(g[2], g2);
    ZSeries empty = g_j_series({}, 3);
    EXPECT_EQ(empty, ZSeries::constant(Scalar(1), 3));
    // Cauchy square of the weight series.
    ZSeries sq = g * g;
    EXPECT_EQ(sq[2], g[1] * g[1] + Scalar(2) * g[0] * g[2]);
}

TEST(SymFunc, GFromQPochhammerProduct) {
    // Π (t c z; q)_∞ / (c z; q)_∞ expanded as Σ_j g_j: for one variable c=1,
    // g_j = (t;q)_j / (q;q)_j.
    ZSeries g = g_j_series({Rational(1)}, 4);
    Scalar num(1), den(1);
    for (int j = 1; j <= 4; ++j) {
        num *= Scalar(1) - t() * q().pow(j - 1);
        den *= Scalar(1) - q().pow(j);
        EXPECT_EQ(g[static_cast<unsigned>(j)], num / den) << j;
    }
}

TEST(SymFunc, HallLittlewoodAndJack) {
    EXPECT_EQ(hl_q_lambda({1}, {Rational(1)}).to_string(), "1 - t");
    Context A{Param::alpha};
    Scalar a = Scalar::param(A, Param::alpha);
    EXPECT_EQ(jack_g_lambda({1}, {Rational(1)}), a.inverse());
    ParamSpace one(Context{});
    one.bind(Param::alpha, Scalar(1));
    ZSeries geo = jack_series({Rational(1)}, 4, one);
    for (unsigned j = 0; j <= 4; ++j) EXPECT_EQ(geo[j], Scalar(1));
}

TEST(SymFunc, PochhammerFrobenius) {
    // (u)_λ = h_λ s_λ(p_k -> u).
    Context U{Param::u};
    Scalar u = Scalar::param(U, Param::u);
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            ParamSpace ps(U);
            Scalar lhs = pochhammer_partition(l);
            Scalar rhs = SymFunc::element(Basis::s, l, ps).eval_powersums([&](int) { return u; }) * Scalar(hook_product(l));
            EXPECT_EQ(lhs, rhs) << to_string(l);
        }
}

TEST(SymFunc, JsonShape) {
    std::string js = SymFunc::element(Basis::m, {2}).to_json();
    EXPECT_NE(js.find("\"basis\":\"m\""), std::string::npos);
    EXPECT_NE(js.find("\"[2]\""), std::string::npos);
    EXPECT_THROW(basis_from_name("nope"), error);
}
