#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhurwitz/rational.hpp"

namespace qhurwitz {

inline constexpr std::uint64_t kDefaultSeed = 20180627;

struct VerifyOptions {
    std::optional<int> n;     // largest n; suite default when unset
    std::optional<int> dmax;  // largest d (or j); suite default when unset
    std::vector<std::vector<Rational>> c_lists;  // empty: (1) and (1,1/2)
    int trials = 5;
    std::uint64_t seed = kDefaultSeed;
    std::string cli_path;  // qhurwitz executable, for the determinism suite
    std::string work_dir;  // scratch directory for the determinism suite
};

struct VerifyResult {
    bool ok = true;
    std::string report;          // one line per checked item
    std::string counterexample;  // first failure, empty when ok
};

/// Suite names in criterion order 1..9.
const std::vector<std::string>& verify_names();
/// Throws error for an unknown name.
VerifyResult run_verify(const std::string& name, const VerifyOptions& opts);

/// Direct count (1/n!) #{(g_1,...,g_k) : g_1 ... g_k = id, g_i of cycle type μ^(i)}.
Rational factorization_hurwitz(const std::vector<std::vector<int>>& profiles, int n);

} // namespace qhurwitz
