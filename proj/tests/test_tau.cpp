#include <gtest/gtest.h>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/hurwitz.hpp"
#include "qhurwitz/tau.hpp"

using namespace qhurwitz;

namespace {

WeightFamily macdonald(std::vector<Rational> c) { return WeightFamily(FamilyKind::macdonald, std::move(c)); }

} // namespace

TEST(ContentProducts, SmallCases) {
    WeightFamily fam = macdonald({Rational(1)});
    EXPECT_EQ(r_lambda({1}, 0, fam, 3).series, ZSeries::constant(Scalar(1), 3));
    EXPECT_EQ(r_lambda({2}, 0, fam, 3).series, fam.weight_series(3));
    EXPECT_EQ(r_zero(0, fam, 3), ZSeries::constant(Scalar(1), 3));
    EXPECT_EQ(r_zero(1, fam, 3), ZSeries::constant(Scalar(1), 3));
    // r_0(2) = G(z).
    EXPECT_EQ(r_zero(2, fam, 3), fam.weight_series(3));
    EXPECT_EQ(r_zero(-1, fam, 3), ZSeries::constant(Scalar(1), 3));
    // r_0(-2) = G(-z)^{-1}.
    EXPECT_EQ(r_zero(-2, fam, 3), fam.weight_series(3).scale_argument(Scalar(-1)).inverse());
}

TEST(ContentProducts, ShiftedCellsAndConstantTerm) {
    WeightFamily fam = macdonald({Rational(1), Rational(1, 3)});
    ZSeries G = fam.weight_series(3);
    // (1,1) at N=2 has cells with N + content 2 and 1.
    ZSeries expect = r_zero(2, fam, 3) * G.scale_argument(Scalar(2)) * G;
    EXPECT_EQ(r_lambda({1, 1}, 2, fam, 3).series, expect);
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : enumerate_partitions(n)) EXPECT_EQ(r_lambda(l, 0, fam, 2).series[0], Scalar(1));
}

TEST(TauTables, MatchCharacterRoute) {
    WeightFamily fam = macdonald({Rational(1)});
    TauTable tt = tau_tables(3, 2, 0, fam);
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 2; ++d) {
            HurwitzTable f = fd_character(n, d, fam);
            for (const auto& [key, v] : f) EXPECT_EQ(tt.powersum.at({d, key.first, key.second}), v);
        }
}

TEST(TauTables, DegreeZeroSliceAndEmptyWeights) {
    TauTable tt = tau_tables(3, 2, 0, macdonald({}));
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (const auto& nu : enumerate_partitions(n)) {
                Scalar d0 = tt.powersum.at({0, mu, nu});
                EXPECT_EQ(d0, mu == nu ? Scalar(Rational(1) / z_mu(mu)) : Scalar(0));
                for (int d = 1; d <= 2; ++d) EXPECT_TRUE(tt.powersum.at({d, mu, nu}).is_zero());
            }
    EXPECT_THROW(tau_tables(kTauMaxN + 1, 1, 0, macdonald({})), bound_exceeded);
}

TEST(TauTables, SchurPowerSumRoundTrip) {
    std::map<Partition, Scalar, RevLex> r;
    Scalar q = Scalar::param(Context{Param::q, Param::t}, Param::q);
    int i = 0;
    for (const auto& l : enumerate_partitions(4)) r[l] = q.pow(i++) + Scalar(Rational(1, i + 1));
    EXPECT_EQ(schur_from_powersum(4, powersum_from_schur(4, r)), r);
}

TEST(TauTables, JsonIsDeterministic) {
    WeightFamily fam = macdonald({Rational(1), Rational(1, 2)});
    std::string a = tau_tables(2, 1, 0, fam).to_json(), b = tau_tables(2, 1, 0, fam).to_json();
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("\"powersum\""), std::string::npos);
    EXPECT_NE(a.find("\"schur\""), std::string::npos);
    EXPECT_FALSE(tau_tables(2, 1, 1, fam).to_latex().empty());
}
