#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qhurwitz/partition.hpp"

namespace qhurwitz {

inline constexpr int kDefaultCharacterBound = 10;

/// χ_λ(μ) by the Murnaghan–Nakayama rule.
long character(const Partition& lambda, const Partition& mu);

/// Character table of S_n. Rows are irreps in reverse-lexicographic order,
/// columns are classes in lexicographic order starting with (1^n).
struct CharacterTable {
    int n = 0;
    std::vector<Partition> irreps;
    std::vector<Partition> classes;
    std::vector<std::vector<long>> chi;

    std::size_t irrep_index(const Partition& lambda) const;
    std::size_t class_index(const Partition& mu) const;
    long value(const Partition& lambda, const Partition& mu) const {
        return chi[irrep_index(lambda)][class_index(mu)];
    }
    long dimension(const Partition& lambda) const { return value(lambda, Partition(n, 1)); }

    std::string to_json() const;
    static CharacterTable from_json(const std::string& text);
};

CharacterTable compute_char_table(int n);

/// Memoized table; also read from / written to the disk cache when one is configured.
const CharacterTable& char_table(int n, int bound = kDefaultCharacterBound);

/// Disk cache directory: set explicitly, else $QHURWITZ_CACHE, else
/// $XDG_CACHE_HOME/qhurwitz or ~/.cache/qhurwitz. An empty path disables it.
void set_cache_dir(const std::filesystem::path& dir);
std::filesystem::path cache_dir();
/// Removes cached character tables, returning how many files were deleted.
int clear_cache();

/// φ_λ(μ) = h_λ χ_λ(μ) / z_μ.
Rational central_character(const Partition& lambda, const Partition& mu);

} // namespace qhurwitz
