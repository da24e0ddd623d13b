#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhurwitz/rational.hpp"
#include "qhurwitz/scalar.hpp"

namespace qhurwitz {

class ParamSpace;

/// Weakly decreasing list of positive parts. The empty list is the partition of 0.
using Partition = std::vector<int>;

inline constexpr int kDefaultPartitionBound = 12;

/// Canonical order: (3) before (2,1) before (1,1,1).
struct RevLex {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// Throws error unless parts are positive and weakly decreasing.
Partition make_partition(std::vector<int> parts);
bool is_partition(const Partition& p);
int weight(const Partition& p);
inline int length(const Partition& p) { return static_cast<int>(p.size()); }
std::string to_string(const Partition& p);

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int bound = kDefaultPartitionBound);

/// Strict dominance μ < λ. Throws weight_mismatch for unequal weights.
bool dominance_less(const Partition& mu, const Partition& lambda);

/// m_i(λ) for every part size i that occurs.
std::map<int, int> multiplicities(const Partition& p);
Partition conjugate(const Partition& p);
Partition merge(const Partition& a, const Partition& b);

Rational z_mu(const Partition& mu);
/// n_μ(q,t) = Π (1 - q^μ_i)/(1 - t^μ_i).
Scalar n_mu_qt(const Partition& mu, const ParamSpace& ps);
Scalar z_mu_qt(const Partition& mu, const ParamSpace& ps);
/// Symbolic version over the parameter set {q, t}.
Scalar z_mu_qt(const Partition& mu);

/// Size of the conjugacy class of cycle type μ, n!/z_μ.
Rational class_size(const Partition& mu);

std::vector<int> contents(const Partition& lambda);
/// ℓ*(μ) = |μ| - ℓ(μ).
int colength(const Partition& mu);
/// Π m_i(λ)!.
Rational aut_order(const Partition& lambda);
/// Product of hook lengths, from det(1/(λ_i - i + j)!)^{-1}.
Rational hook_product(const Partition& lambda);

/// (u)_λ = Π over cells (u + j - i), a polynomial in u.
Scalar pochhammer_partition(const Partition& lambda);

} // namespace qhurwitz
