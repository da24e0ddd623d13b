#include <gtest/gtest.h>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/params.hpp"
#include "qhurwitz/partition.hpp"

using namespace qhurwitz;

namespace {

// p(n) by Euler's pentagonal number recurrence.
long partition_count(int n) {
    std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            long sgn = k % 2 ? 1 : -1;
            p[static_cast<std::size_t>(m)] += sgn * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) p[static_cast<std::size_t>(m)] += sgn * p[static_cast<std::size_t>(m - g2)];
        }
    return p[static_cast<std::size_t>(n)];
}

// Hook lengths counted cell by cell.
long hooks_direct(const Partition& l) {
    Partition c = conjugate(l);
    long h = 1;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (int j = 0; j < l[i]; ++j) h *= (l[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return h;
}

} // namespace

TEST(Partitions, CountsMatchPentagonalRecurrence) {
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(static_cast<long>(enumerate_partitions(n).size()), partition_count(n)) << n;
}

TEST(Partitions, ReverseLexOrder) {
    auto p = enumerate_partitions(3);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[0], (Partition{3}));
    EXPECT_EQ(p[1], (Partition{2, 1}));
    EXPECT_EQ(p[2], (Partition{1, 1, 1}));
    EXPECT_THROW(enumerate_partitions(13), bound_exceeded);
    EXPECT_THROW(make_partition({1, 2}), error);
    EXPECT_THROW(make_partition({2, 0}), error);
}

TEST(Partitions, ConjugateIsInvolutionAndReversesDominance) {
    for (int n = 1; n <= 8; ++n) {
        auto parts = enumerate_partitions(n);
        for (const auto& a : parts) {
            EXPECT_EQ(conjugate(conjugate(a)), a);
            for (const auto& b : parts)
                if (dominance_less(a, b)) EXPECT_TRUE(dominance_less(conjugate(b), conjugate(a)));
        }
    }
    EXPECT_TRUE(dominance_less({2, 2}, {3, 1}));
    EXPECT_FALSE(dominance_less({3, 1, 1, 1}, {2, 2, 2}));
    EXPECT_FALSE(dominance_less({2, 2, 2}, {3, 1, 1, 1}));
    EXPECT_THROW(dominance_less({1}, {2}), weight_mismatch);
}

TEST(Partitions, ClassSizesSumToFactorial) {
    for (int n = 1; n <= 9; ++n) {
        Rational s(0), inv(0);
        for (const auto& mu : enumerate_partitions(n)) {
            s += class_size(mu);
            inv += Rational(1) / z_mu(mu);
        }
        EXPECT_EQ(s, factorial(n));
        EXPECT_EQ(inv, Rational(1));
    }
    EXPECT_EQ(z_mu({2, 2, 1}), Rational(8));
}

TEST(Partitions, HookProductMatchesCellCount) {
    for (int n = 1; n <= 9; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            EXPECT_EQ(hook_product(l), Rational(hooks_direct(l))) << to_string(l);
            // n!/h_λ is the dimension of the irreducible representation.
            EXPECT_EQ(factorial(n) / hook_product(l), Rational(char_table(n).dimension(l)));
        }
}

TEST(Partitions, ContentsColengthAut) {
    EXPECT_EQ(contents({2, 1}), (std::vector<int>{0, 1, -1}));
    EXPECT_EQ(colength({3, 1}), 2);
    EXPECT_EQ(colength({1, 1, 1}), 0);
    EXPECT_EQ(aut_order({2, 2, 1}), Rational(2));
    EXPECT_EQ(merge({3, 1}, {2}), (Partition{3, 2, 1}));
    EXPECT_EQ(to_string({2, 1}), "[2,1]");
}

TEST(Partitions, PochhammerValues) {
    // (u)_(2,1) = u(u+1)(u-1).
    Scalar p = pochhammer_partition({2, 1});
    for (int v = -3; v <= 3; ++v)
        EXPECT_EQ(p.eval({{Param::u, Rational(v)}}), Rational(v * (v + 1) * (v - 1)));
}

TEST(Partitions, QtDeformedZ) {
    ParamSpace ps;
    // z_(1)(q,t) = (1 - q)/(1 - t).
    EXPECT_EQ(z_mu_qt({1}, ps).to_string(), "(1 - q)/(1 - t)");
    ParamSpace tq(Context{Param::q});
    tq.bind(Param::t, Scalar::param(Context{Param::q}, Param::q));
    for (const auto& mu : enumerate_partitions(4)) EXPECT_EQ(z_mu_qt(mu, tq), Scalar(z_mu(mu)));
}
