#include <gtest/gtest.h>

#include <filesystem>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"

using namespace qhurwitz;

TEST(Characters, S3Table) {
    // Rows (3),(2,1),(1,1,1); columns (1,1,1),(2,1),(3).
    const auto& ct = char_table(3);
    std::vector<std::vector<long>> expect{{1, 1, 1}, {2, 0, -1}, {1, -1, 1}};
    EXPECT_EQ(ct.chi, expect);
    EXPECT_EQ(ct.classes.front(), (Partition{1, 1, 1}));
}

TEST(Characters, Orthogonality) {
    for (int n = 1; n <= 8; ++n) {
        const auto& ct = char_table(n);
        for (const auto& a : ct.irreps)
            for (const auto& b : ct.irreps) {
                Rational s(0);
                for (const auto& mu : ct.classes) s += Rational(ct.value(a, mu) * ct.value(b, mu)) / z_mu(mu);
                EXPECT_EQ(s, Rational(a == b ? 1 : 0));
            }
        for (const auto& mu : ct.classes)
            for (const auto& nu : ct.classes) {
                long s = 0;
                for (const auto& l : ct.irreps) s += ct.value(l, mu) * ct.value(l, nu);
                EXPECT_EQ(Rational(s), mu == nu ? z_mu(mu) : Rational(0));
            }
    }
}

TEST(Characters, SignTwist) {
    // χ_{λ'}(μ) = sgn(μ) χ_λ(μ).
    for (int n = 1; n <= 7; ++n)
        for (const auto& l : enumerate_partitions(n))
            for (const auto& mu : enumerate_partitions(n)) {
                long sgn = colength(mu) % 2 ? -1 : 1;
                EXPECT_EQ(character(conjugate(l), mu), sgn * character(l, mu));
            }
}

TEST(Characters, CentralCharacterOfTranspositions) {
    // φ_λ((2,1^{n-2})) is the content sum of λ.
    for (int n = 2; n <= 7; ++n) {
        Partition tr{2};
        tr.resize(static_cast<std::size_t>(n - 1), 1);
        for (const auto& l : enumerate_partitions(n)) {
            long s = 0;
            for (int c : contents(l)) s += c;
            EXPECT_EQ(central_character(l, tr), Rational(s));
        }
    }
}

TEST(Characters, JsonRoundTripAndDiskCache) {
    auto dir = std::filesystem::temp_directory_path() / "qhurwitz-test-cache";
    std::filesystem::remove_all(dir);
    set_cache_dir(dir);
    CharacterTable a = compute_char_table(10);
    EXPECT_EQ(CharacterTable::from_json(a.to_json()).chi, a.chi);
    const auto& b = char_table(10);
    EXPECT_EQ(b.chi, a.chi);
    EXPECT_TRUE(std::filesystem::exists(dir / "chars_n10.json"));
    EXPECT_GE(clear_cache(), 1);
    EXPECT_FALSE(std::filesystem::exists(dir / "chars_n10.json"));
    set_cache_dir("");
    EXPECT_THROW(char_table(11), bound_exceeded);
    std::filesystem::remove_all(dir);
}
