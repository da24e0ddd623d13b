#include "qhurwitz/family.hpp"

#include "qhurwitz/errors.hpp"
#include "qhurwitz/symfunc.hpp"

namespace qhurwitz {

std::string family_name(FamilyKind k) {
    switch (k) {
    case FamilyKind::macdonald: return "macdonald";
    case FamilyKind::elementary: return "elementary";
    case FamilyKind::complete: return "complete";
    case FamilyKind::hall_littlewood: return "hall_littlewood";
    case FamilyKind::jack: return "jack";
    case FamilyKind::classical: return "classical";
    }
    return "?";
}

FamilyKind family_from_name(const std::string& name) {
    for (auto k : {FamilyKind::macdonald, FamilyKind::elementary, FamilyKind::complete,
                   FamilyKind::hall_littlewood, FamilyKind::jack, FamilyKind::classical})
        if (family_name(k) == name) return k;
    if (name == "E") return FamilyKind::elementary;
    if (name == "H") return FamilyKind::complete;
    if (name == "hl" || name == "L") return FamilyKind::hall_littlewood;
    throw error("unknown family '" + name + "'");
}

Context family_context(FamilyKind k) {
    switch (k) {
    case FamilyKind::macdonald: return Context{Param::q, Param::t};
    case FamilyKind::elementary:
    case FamilyKind::complete: return Context{Param::q};
    case FamilyKind::hall_littlewood: return Context{Param::t};
    case FamilyKind::jack: return Context{Param::alpha};
    case FamilyKind::classical: return Context();
    }
    return Context();
}

WeightFamily::WeightFamily(FamilyKind kind, std::vector<Rational> c)
    : kind(kind), c(std::move(c)), params(family_context(kind)) {}

WeightFamily::WeightFamily(FamilyKind kind, std::vector<Rational> c, ParamSpace params)
    : kind(kind), c(std::move(c)), params(std::move(params)) {}

Scalar WeightFamily::powersum_factor(int k) const {
    switch (kind) {
    case FamilyKind::macdonald:
        return (Scalar(1) - params.t().pow(k)) / (Scalar(1) - params.q().pow(k));
    case FamilyKind::elementary:
        return Scalar(k % 2 ? 1 : -1) / (Scalar(1) - params.q().pow(k));
    case FamilyKind::complete: return (Scalar(1) - params.q().pow(k)).inverse();
    case FamilyKind::hall_littlewood: return Scalar(1) - params.t().pow(k);
    case FamilyKind::jack: return params.alpha().inverse();
    case FamilyKind::classical: return Scalar(1);
    }
    throw error("unknown family");
}

ZSeries WeightFamily::weight_series(unsigned order) const {
    if (kind == FamilyKind::jack) return jack_series(c, order, params);
    std::vector<Scalar> coeffs;
    for (unsigned j = 0; j <= order; ++j) {
        Scalar s(0);
        for (const auto& mu : enumerate_partitions(static_cast<int>(j), kDefaultSymDegreeBound)) {
            Scalar term = p_mu_value(mu, c);
            if (term.is_zero()) continue;
            term *= Scalar(Rational(1) / z_mu(mu));
            for (int k : mu) term *= powersum_factor(k);
            s += term;
        }
        coeffs.push_back(s);
    }
    return ZSeries::from_coeffs(std::move(coeffs), order);
}

Scalar WeightFamily::coefficient(int j) const { return weight_series(static_cast<unsigned>(j))[static_cast<unsigned>(j)]; }

Scalar WeightFamily::path_weight(const Partition& lambda) const {
    if (lambda.empty()) return Scalar(1);
    ZSeries s = weight_series(static_cast<unsigned>(lambda.front()));
    Scalar r(1);
    for (int j : lambda) r *= s[static_cast<unsigned>(j)];
    return r;
}

std::string WeightFamily::key() const {
    std::string k = family_name(kind) + "|c=";
    for (std::size_t i = 0; i < c.size(); ++i) k += (i ? "," : "") + c[i].to_string();
    return k + "|" + params.key();
}

} // namespace qhurwitz
