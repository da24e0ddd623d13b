#pragma once

#include <map>
#include <string>
#include <tuple>

#include "qhurwitz/family.hpp"
#include "qhurwitz/partition.hpp"
#include "qhurwitz/zseries.hpp"

namespace qhurwitz {

inline constexpr int kTauMaxN = 8;
inline constexpr int kTauMaxD = 8;

/// r_λ(N) as a series in z.
struct ContentProductSeries {
    Partition lambda;
    int N = 0;
    ZSeries series;
};

/// r_0(N): Π_{j=1}^{N-1} G((N-j)z) for N >= 1, 1 for N = 0, and
/// Π_{j=1}^{|N|} G((j-|N|)z)^{-1} for N < 0.
ZSeries r_zero(int N, const WeightFamily& family, unsigned order);

/// r_0(N) Π over cells (i,j) of G((N + j - i) z).
ContentProductSeries r_lambda(const Partition& lambda, int N, const WeightFamily& family, unsigned order);

struct TauTable {
    int N = 0;
    int n_max = 0;
    int d_max = 0;
    WeightFamily family{FamilyKind::macdonald, {}};
    std::map<Partition, ZSeries, RevLex> schur;
    /// (d, μ, ν) -> coefficient of z^d p_μ p_ν.
    std::map<std::tuple<int, Partition, Partition>, Scalar> powersum;

    /// {"N":..,"n_max":..,"d_max":..,"family":{..},"schur":[..],"powersum":[..]}
    std::string to_json() const;
    /// One tabular per (n, d) block of the power-sum table.
    std::string to_latex() const;
};

TauTable tau_tables(int n_max, int d_max, int N, const WeightFamily& family);

/// Power-sum coefficients of Σ_λ r_λ s_λ s_λ restricted to |λ| = n and z^d.
std::map<std::pair<Partition, Partition>, Scalar> powersum_from_schur(
    int n, const std::map<Partition, Scalar, RevLex>& r);
/// Inverse transform: r_λ = Σ_{μ,ν} F(μ,ν) χ_λ(μ) χ_λ(ν).
std::map<Partition, Scalar, RevLex> schur_from_powersum(
    int n, const std::map<std::pair<Partition, Partition>, Scalar>& f);

} // namespace qhurwitz
