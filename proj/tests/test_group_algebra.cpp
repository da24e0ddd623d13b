#include <gtest/gtest.h>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/group_algebra.hpp"

using namespace qhurwitz;

TEST(Permutation, CompositionAndCycleType) {
    Permutation a = Permutation::transposition(3, 1, 2), b = Permutation::transposition(3, 2, 3);
    EXPECT_EQ((a * b).cycle_type(), (Partition{3}));
    EXPECT_EQ((a * a).cycle_type(), (Partition{1, 1, 1}));
    // (a*b)(i) = a(b(i)) with 0-based images.
    EXPECT_EQ((a * b).one_line(), (std::vector<int>{2, 3, 1}));
    EXPECT_EQ(Permutation::of_cycle_type({2, 2}).cycle_type(), (Partition{2, 2}));
    EXPECT_EQ(all_permutations(4).size(), 24u);
}

TEST(GroupAlgebra, JucysMurphyCommuteAndSum) {
    const int n = 4;
    std::vector<GroupAlgebraElement> J;
    for (int b = 1; b <= n; ++b) J.push_back(GroupAlgebraElement::jucys_murphy(n, b));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) EXPECT_EQ(J[static_cast<std::size_t>(i)] * J[static_cast<std::size_t>(j)], J[static_cast<std::size_t>(j)] * J[static_cast<std::size_t>(i)]);
    GroupAlgebraElement s(n);
    for (const auto& x : J) s += x;
    EXPECT_EQ(s, GroupAlgebraElement::class_sum({2, 1, 1}));
}

TEST(GroupAlgebra, ElementarySymmetricInJucysMurphy) {
    // e_k(J_1..J_n) is the sum of all permutations with colength k.
    for (int n = 2; n <= 4; ++n) {
        for (int k = 0; k < n; ++k) {
            SymFunc e(k, Basis::s);
            e.add(Partition(static_cast<std::size_t>(k), 1), Scalar(1));
            CentralElement lhs = jm_symmetric_apply(e, n);
            CentralElement rhs(n, CentralBasis::C);
            for (const auto& mu : enumerate_partitions(n))
                if (colength(mu) == k) rhs.add(mu, Scalar(1));
            EXPECT_EQ(lhs, rhs) << n << " " << k;
        }
    }
}

TEST(GroupAlgebra, IdempotentsAreOrthogonal) {
    for (int n = 1; n <= 4; ++n) {
        CentralElement sum(n, CentralBasis::C);
        for (const auto& l : enumerate_partitions(n)) {
            CentralElement F = CentralElement::idempotent(l);
            sum += F;
            GroupAlgebraElement x = F.to_group_algebra();
            EXPECT_EQ(x * x, x);
            for (const auto& m : enumerate_partitions(n)) {
                if (m == l) continue;
                GroupAlgebraElement y = CentralElement::idempotent(m).to_group_algebra();
                EXPECT_TRUE((x * y).terms().empty());
            }
        }
        EXPECT_EQ(sum, CentralElement::identity(n));
    }
}

TEST(GroupAlgebra, BasisChangeExamples) {
    CentralElement c2 = CentralElement::class_sum({2}).convert(CentralBasis::F);
    EXPECT_EQ(c2.coeff({2}), Scalar(1));
    EXPECT_EQ(c2.coeff({1, 1}), Scalar(-1));
    CentralElement id = CentralElement::identity(3).convert(CentralBasis::F);
    for (const auto& l : enumerate_partitions(3)) EXPECT_EQ(id.coeff(l), Scalar(1));
    CentralElement x(4, CentralBasis::C);
    x.add({2, 2}, Scalar(Rational(3, 7)));
    x.add({3, 1}, Scalar(-2));
    EXPECT_EQ(x.convert(CentralBasis::F).convert(CentralBasis::C).coeffs(), x.coeffs());
}

TEST(GroupAlgebra, CentralMultiplyAgreesWithExplicitProduct) {
    CentralElement c = CentralElement::class_sum({2, 1});
    CentralElement sq = central_multiply(c, c);
    EXPECT_EQ(sq.coeff({1, 1, 1}), Scalar(3));
    EXPECT_EQ(sq.coeff({3}), Scalar(3));
    EXPECT_TRUE(sq.coeff({2, 1}).is_zero());
    for (const auto& a : enumerate_partitions(4))
        for (const auto& b : enumerate_partitions(4)) {
            CentralElement x = CentralElement::class_sum(a), y = CentralElement::class_sum(b);
            GroupAlgebraElement prod = x.to_group_algebra() * y.to_group_algebra();
            EXPECT_EQ(central_multiply(x, y), CentralElement::from_group_algebra(prod));
        }
}

TEST(GroupAlgebra, PowerSumInJucysMurphy) {
    SymFunc p1 = SymFunc::element(Basis::p, {1});
    EXPECT_EQ(jm_symmetric_apply(p1, 2), CentralElement::class_sum({2}));
    CentralElement f = jm_symmetric_apply(p1, 2).convert(CentralBasis::F);
    EXPECT_EQ(f.coeff({2}), Scalar(1));
    // p_2(J) computed from explicit squares of J_b.
    const int n = 4;
    GroupAlgebraElement s(n);
    for (int b = 1; b <= n; ++b) {
        auto J = GroupAlgebraElement::jucys_murphy(n, b);
        s += J * J;
    }
    EXPECT_EQ(jm_symmetric_apply(SymFunc::element(Basis::p, {2}), n), CentralElement::from_group_algebra(s));
}

TEST(Paths, SmallCounts) {
    auto p21 = enumerate_paths(2, 1);
    EXPECT_EQ(p21.count({1}, {1, 1}, {2}), 1);
    auto p31 = enumerate_paths(3, 1);
    EXPECT_EQ(p31.count({1}, {3}, {2, 1}), 6);
    auto p32 = enumerate_paths(3, 2);
    EXPECT_EQ(p32.count({2}, {1, 1, 1}, {1, 1, 1}), 3);
    EXPECT_EQ(p32.count({1, 1}, {1, 1, 1}, {1, 1, 1}), 0);
    EXPECT_THROW(enumerate_paths(kPathMaxN + 1, 1), bound_exceeded);
}

TEST(Paths, TotalCountIsClassSizeTimesTranspositionPower) {
    for (int n = 2; n <= 4; ++n)
        for (int d = 0; d <= 3; ++d) {
            auto pc = enumerate_paths(n, d);
            long steps = 1;
            for (int i = 0; i < d; ++i) steps *= n * (n - 1) / 2;
            for (const auto& from : enumerate_partitions(n)) {
                long total = 0;
                for (const auto& [key, v] : pc.counts)
                    if (std::get<1>(key) == from) total += v;
                EXPECT_EQ(Rational(total), class_size(from) * Rational(steps));
            }
        }
}

TEST(Paths, MonomialInJucysMurphyMatchesPathCounts) {
    // [C_ν] m_λ(J) C_μ = m^λ_{νμ} z_ν / n!.
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d) {
            auto pc = enumerate_paths(n, d);
            for (const auto& lam : enumerate_partitions(d)) {
                if (static_cast<int>(lam.size()) > n) continue;
                CentralElement ml = jm_symmetric_apply(SymFunc::element(Basis::m, lam), n);
                for (const auto& mu : enumerate_partitions(n)) {
                    CentralElement prod = central_multiply(ml, CentralElement::class_sum(mu)).convert(CentralBasis::C);
                    for (const auto& nu : enumerate_partitions(n))
                        EXPECT_EQ(prod.coeff(nu), Scalar(pc.normalized(lam, nu, mu) * z_mu(nu) / factorial(n)));
                }
            }
        }
}

TEST(Paths, FdBruteforceBasics) {
    WeightFamily fam(FamilyKind::macdonald, {Rational(1)});
    auto f0 = fd_bruteforce(3, 0, fam);
    for (const auto& mu : enumerate_partitions(3))
        for (const auto& nu : enumerate_partitions(3))
            EXPECT_EQ(f0[std::make_pair(mu, nu)], mu == nu ? Scalar(Rational(1) / z_mu(mu)) : Scalar(0));
    auto f1 = fd_bruteforce(2, 1, fam);
    EXPECT_EQ(f1[std::make_pair(Partition{2}, Partition{1, 1})], fam.coefficient(1) / Scalar(2));
    EXPECT_EQ(f1[std::make_pair(Partition{1, 1}, Partition{2})], fam.coefficient(1) / Scalar(2));
}

TEST(Paths, JsonIsDeterministic) {
    EXPECT_EQ(enumerate_paths(3, 2).to_json(), enumerate_paths(3, 2).to_json());
}
