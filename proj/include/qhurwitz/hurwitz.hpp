#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhurwitz/family.hpp"
#include "qhurwitz/partition.hpp"
#include "qhurwitz/rational.hpp"
#include "qhurwitz/scalar.hpp"

namespace qhurwitz {

inline constexpr int kHurwitzMaxN = 5;
inline constexpr int kHurwitzMaxD = 4;
inline constexpr int kCharacterRouteMaxN = 8;
inline constexpr int kCharacterRouteMaxD = 8;

using HurwitzTable = std::map<std::pair<Partition, Partition>, Scalar>;

/// H(μ^(1),...,μ^(k)) = Σ_λ h_λ^{k-2} Π_i χ_λ(μ^(i)) / z_{μ^(i)}.
Rational pure_hurwitz(const std::vector<Partition>& profiles, int n);

/// (1/|aut λ|) Σ_σ q^{Σ_s (k-s) ℓ*(μ^σ(s))} / Π_r (1 - q^{ℓ*(μ^σ(1)) + ... + ℓ*(μ^σ(r))}),
/// λ the partition of colengths.
Scalar weight_WE(const std::vector<Partition>& profiles, const Scalar& q);
/// ((-1)^{ℓ*(λ̃)} / |aut λ̃|) Σ_σ 1 / Π_r (1 - q^{ℓ*(ν^σ(1)) + ... + ℓ*(ν^σ(r))}).
Scalar weight_WH(const std::vector<Partition>& profiles, const Scalar& q);

/// Σ_σ q^{Σ_s (k-s) a_σ(s)} / Π_r (1 - q^{a_σ(1)+...+a_σ(r)}).
Scalar strict_ordered_sum(const std::vector<int>& colengths, const Scalar& q);
/// Σ_σ 1 / Π_r (1 - q^{a_σ(1)+...+a_σ(r)}).
Scalar weak_ordered_sum(const std::vector<int>& colengths, const Scalar& q);

/// Branch points of one colour: class-I and class-II profiles, each a
/// multiset of non-identity partitions of n stored in reverse-lex order.
struct ColourGroup {
    std::vector<Partition> class_I;
    std::vector<Partition> class_II;
    int colength() const;
    int class_I_colength() const;
};

/// Multisets of non-identity partitions of n with total colength j.
std::vector<std::vector<Partition>> profile_multisets(int n, int j);
/// Colour groups of total colength j admitted by the family.
std::vector<ColourGroup> colour_groups(int n, int j, FamilyKind kind);
/// Weight of one colour group, excluding the factor t^e of the class-I colength.
Scalar colour_group_weight(const ColourGroup& g, const WeightFamily& family);

/// Coefficient of t^e in F^d: sum over colour-group configurations with class-I
/// colength e of m_λ(c) Π W(G_i) H(all profiles, μ, ν).
HurwitzTable hde_geometric(int n, int d, int e, const WeightFamily& family);

/// F^d(μ,ν) = [C_ν] (M_n^{(d)} C_μ) / z_ν with M_n^{(d)} = Σ_λ [z^d] r_λ F_λ.
HurwitzTable fd_character(int n, int d, const WeightFamily& family);

struct CheckReport {
    bool ok = true;
    std::string report;
};

/// g_j(J,q,t) against the weighted sum of products of class sums; Macdonald
/// family parameters taken from ps.
CheckReport gj_cycle_expansion_check(int n, int j, const ParamSpace& ps = ParamSpace());

} // namespace qhurwitz
