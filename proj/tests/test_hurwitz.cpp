#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/group_algebra.hpp"
#include "qhurwitz/hurwitz.hpp"
#include "qhurwitz/verify.hpp"

using namespace qhurwitz;

namespace {

const Context Q{Param::q};
Scalar qs() { return Scalar::param(Q, Param::q); }

constexpr int kOrder = 20;

// Power series of a rational function in q up to q^kOrder.
std::vector<Rational> taylor(const Scalar& f) {
    std::vector<Rational> num(kOrder + 1), den(kOrder + 1), out(kOrder + 1);
    for (int k = 0; k <= kOrder; ++k) {
        num[static_cast<std::size_t>(k)] = f.num().coefficient(Param::q, static_cast<unsigned>(k)).constant_term();
        den[static_cast<std::size_t>(k)] = f.den().coefficient(Param::q, static_cast<unsigned>(k)).constant_term();
    }
    for (int k = 0; k <= kOrder; ++k) {
        Rational s = num[static_cast<std::size_t>(k)];
        for (int i = 1; i <= k; ++i) s -= den[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
        out[static_cast<std::size_t>(k)] = s / den[0];
    }
    return out;
}

Rational aut_of(std::vector<int> a) {
    std::sort(a.begin(), a.end());
    Rational aut(1);
    for (std::size_t i = 0; i < a.size();) {
        std::size_t j = i;
        while (j < a.size() && a[j] == a[i]) ++j;
        aut *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return aut;
}

// Σ_σ Σ_{i_1 ◁ ... ◁ i_k} q^{Σ i_s a_σ(s)} truncated at q^kOrder, ◁ strict or weak.
std::vector<Rational> ordered_series(std::vector<int> a, bool strict) {
    std::vector<Rational> out(kOrder + 1);
    std::sort(a.begin(), a.end());
    std::vector<int> perm(a.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
        std::function<void(std::size_t, int, int)> rec = [&](std::size_t s, int lo, int exp) {
            if (exp > kOrder) return;
            if (s == a.size()) {
                out[static_cast<std::size_t>(exp)] += Rational(1);
                return;
            }
            int w = a[static_cast<std::size_t>(perm[s])];
            for (int i = lo; exp + i * w <= kOrder; ++i) rec(s + 1, strict ? i + 1 : i, exp + i * w);
        };
        rec(0, 0, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Partition profile_of_colength(int k) { return Partition{k + 1}; }

std::vector<Partition> profiles(const std::vector<int>& colengths) {
    std::vector<Partition> out;
    for (int k : colengths) out.push_back(profile_of_colength(k));
    return out;
}

} // namespace

TEST(PureHurwitz, Examples) {
    EXPECT_EQ(pure_hurwitz({{2}, {2}}, 2), Rational(1, 2));
    EXPECT_EQ(pure_hurwitz({{2}, {2}, {2}}, 2), Rational(0));
    EXPECT_EQ(pure_hurwitz({{3}, {3}}, 3), Rational(1, 3));
    // Two-point numbers are δ_{μν}/z_μ.
    for (const auto& mu : enumerate_partitions(4))
        for (const auto& nu : enumerate_partitions(4))
            EXPECT_EQ(pure_hurwitz({mu, nu}, 4), mu == nu ? Rational(1) / z_mu(mu) : Rational(0));
}

TEST(PureHurwitz, MatchesFactorizationCount) {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 4; ++n) {
        auto parts = enumerate_partitions(n);
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<Partition> prof;
            int k = 2 + trial % 3;
            for (int i = 0; i < k; ++i) prof.push_back(parts[pick(rng)]);
            EXPECT_EQ(pure_hurwitz(prof, n), factorization_hurwitz(prof, n));
        }
    }
}

TEST(PureHurwitz, SymmetryAndParity) {
    for (int n = 2; n <= 4; ++n) {
        auto parts = enumerate_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) {
                    Rational h = pure_hurwitz({a, b, c}, n);
                    EXPECT_EQ(h, pure_hurwitz({c, a, b}, n));
                    EXPECT_EQ(h, pure_hurwitz({b, a, c}, n));
                    if ((colength(a) + colength(b) + colength(c)) % 2) EXPECT_EQ(h, Rational(0));
                }
    }
}

TEST(Weights, ClosedForms) {
    Scalar q = qs(), one(1);
    EXPECT_EQ(weight_WE({{2}}, q), one / (one - q));
    EXPECT_EQ(weight_WE({{2}, {2}}, q), q / ((one - q) * (one - q * q)));
    // ℓ*((1)) = 0: the sign of a single colength-one profile is +1.
    EXPECT_EQ(weight_WH({{2}}, q), one / (one - q));
    // Colength partition (1,1) has ℓ* = 0; (2,1) has ℓ* = 1.
    EXPECT_EQ(weight_WH({{2}, {2}}, q), one / ((one - q) * (one - q * q)));
    EXPECT_EQ(weight_WH({{3}, {2}}, q), -(Scalar(2) + q) / ((one - q * q) * (one - q * q * q)));
}

TEST(Weights, TruncatedSeriesAgree) {
    for (const std::vector<int>& a :
         std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {1, 2}, {2, 3}, {1, 1, 2}, {1, 2, 3}, {2, 2, 2}}) {
        EXPECT_EQ(taylor(strict_ordered_sum(a, qs())), ordered_series(a, true));
        EXPECT_EQ(taylor(weak_ordered_sum(a, qs())), ordered_series(a, false));
        // W_E and W_H add 1/|aut| and the sign.
        auto prof = profiles(a);
        std::vector<Rational> we = taylor(weight_WE(prof, qs())), sref = ordered_series(a, true);
        for (auto& x : sref) x /= aut_of(a);
        EXPECT_EQ(we, sref);
        Partition lt(a.begin(), a.end());
        std::sort(lt.rbegin(), lt.rend());
        Rational sign = colength(lt) % 2 ? Rational(-1) : Rational(1);
        std::vector<Rational> wh = taylor(weight_WH(prof, qs())), ref = ordered_series(a, false);
        for (auto& x : ref) x *= sign / aut_of(a);
        EXPECT_EQ(wh, ref);
    }
}

TEST(ColourGroups, EnumerationCounts) {
    // Non-identity partitions of 3 by colength: (2,1) has 1, (3) has 2.
    EXPECT_EQ(profile_multisets(3, 1).size(), 1u);
    EXPECT_EQ(profile_multisets(3, 2).size(), 2u);
    EXPECT_EQ(profile_multisets(3, 0).size(), 1u);
    for (const auto& g : colour_groups(3, 2, FamilyKind::macdonald)) {
        EXPECT_EQ(g.colength(), 2);
        EXPECT_FALSE(g.class_I.empty() && g.class_II.empty());
    }
    for (const auto& g : colour_groups(3, 2, FamilyKind::elementary)) EXPECT_TRUE(g.class_II.empty());
    for (const auto& g : colour_groups(3, 2, FamilyKind::complete)) EXPECT_TRUE(g.class_I.empty());
}

TEST(Hde, DegreeZeroAndInfeasible) {
    WeightFamily fam(FamilyKind::macdonald, {Rational(1)});
    HurwitzTable h0 = hde_geometric(3, 0, 0, fam);
    for (const auto& mu : enumerate_partitions(3))
        for (const auto& nu : enumerate_partitions(3))
            EXPECT_EQ(h0[std::make_pair(mu, nu)], mu == nu ? Scalar(Rational(1) / z_mu(mu)) : Scalar(0));
    HurwitzTable h = hde_geometric(3, 1, 2, fam);
    for (const auto& [k, v] : h) EXPECT_TRUE(v.is_zero());
}

TEST(Fd, EmptyWeightListVanishes) {
    WeightFamily fam(FamilyKind::macdonald, {});
    for (int d = 1; d <= 2; ++d)
        for (const auto& [k, v] : fd_character(3, d, fam)) EXPECT_TRUE(v.is_zero());
}

TEST(Fd, CharacterRouteMatchesPaths) {
    for (const auto& c : std::vector<std::vector<Rational>>{{Rational(1)}, {Rational(1), Rational(1, 2)}}) {
        WeightFamily fam(FamilyKind::macdonald, c);
        for (int d = 0; d <= 2; ++d) EXPECT_EQ(fd_character(3, d, fam), fd_bruteforce(3, d, fam)) << d;
    }
}

TEST(Fd, PolynomialInTWithGeometricCoefficients) {
    WeightFamily fam(FamilyKind::macdonald, {Rational(1), Rational(1, 2)});
    for (int d = 0; d <= 2; ++d) {
        HurwitzTable f = fd_character(3, d, fam);
        for (const auto& [key, v] : f) {
            auto coeffs = v.coefficients_in(Param::t);
            EXPECT_LE(static_cast<int>(coeffs.size()), d + 1);
            for (int e = 0; e <= d; ++e) {
                Scalar ce = e < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(e)] : Scalar(0);
                Scalar he = hde_geometric(3, d, e, fam).at(key);
                EXPECT_EQ(ce.with_context(Context{Param::q, Param::t}), he.with_context(Context{Param::q, Param::t}));
            }
        }
    }
}

TEST(Fd, BoundsAreEnforced) {
    WeightFamily fam(FamilyKind::macdonald, {Rational(1)});
    EXPECT_THROW(fd_character(kCharacterRouteMaxN + 1, 1, fam), bound_exceeded);
    EXPECT_THROW(hde_geometric(kHurwitzMaxN + 1, 1, 0, fam), bound_exceeded);
}

TEST(CycleExpansion, SmallCases) {
    for (auto [n, j] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
        CheckReport r = gj_cycle_expansion_check(n, j);
        EXPECT_TRUE(r.ok) << n << " " << j << "\n" << r.report;
    }
}
