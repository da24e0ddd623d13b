#pragma once

#include <string>
#include <vector>

#include "qhurwitz/params.hpp"
#include "qhurwitz/partition.hpp"
#include "qhurwitz/zseries.hpp"

namespace qhurwitz {

enum class FamilyKind { macdonald, elementary, complete, hall_littlewood, jack, classical };

std::string family_name(FamilyKind k);
FamilyKind family_from_name(const std::string& name);
/// Parameters a family depends on.
Context family_context(FamilyKind k);

/// Weight generating function G(c, z) = Π_i G(z c_i) = Σ_j w_j z^j of one of
/// the supported families, with its parameter bindings.
struct WeightFamily {
    FamilyKind kind = FamilyKind::macdonald;
    std::vector<Rational> c;
    ParamSpace params;

    WeightFamily(FamilyKind kind, std::vector<Rational> c);
    WeightFamily(FamilyKind kind, std::vector<Rational> c, ParamSpace params);

    /// f(k) with log G(z) = Σ_k f(k) p_k(c) z^k / k.
    Scalar powersum_factor(int k) const;
    /// w_0..w_D from the finite partition sums (Jack: generalized binomial series).
    ZSeries weight_series(unsigned order) const;
    Scalar coefficient(int j) const;
    /// w_λ = Π w_{λ_i}.
    Scalar path_weight(const Partition& lambda) const;
    std::string key() const;
};

} // namespace qhurwitz
