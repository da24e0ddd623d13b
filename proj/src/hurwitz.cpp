#include "qhurwitz/hurwitz.hpp"

#include <algorithm>
#include <numeric>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"
#include "qhurwitz/group_algebra.hpp"
#include "qhurwitz/parallel.hpp"
#include "qhurwitz/symfunc.hpp"
#include "qhurwitz/tau.hpp"

namespace qhurwitz {

Rational pure_hurwitz(const std::vector<Partition>& profiles, int n) {
    if (profiles.empty()) throw error("pure_hurwitz needs at least one profile");
    for (const auto& p : profiles)
        if (!is_partition(p) || weight(p) != n)
            throw weight_mismatch("profile " + to_string(p) + " is not a partition of " + std::to_string(n));
    const auto& ct = char_table(n);
    const long k = static_cast<long>(profiles.size());
    Rational sum(0);
    for (const auto& lambda : ct.irreps) {
        Rational term = hook_product(lambda).pow(k - 2);
        for (const auto& p : profiles) {
            long chi = ct.value(lambda, p);
            if (chi == 0) {
                term = Rational(0);
                break;
            }
            term *= Rational(chi) / z_mu(p);
        }
        sum += term;
    }
    return sum;
}

namespace {

// Σ over orderings; the exponent of q in the numerator is supplied per ordering.
template <typename Numer>
Scalar ordered_sum(std::vector<int> a, const Scalar& q, Numer numer) {
    std::vector<int> idx(a.size());
    std::iota(idx.begin(), idx.end(), 0);
    Scalar sum(0);
    do {
        std::vector<int> perm;
        for (int i : idx) perm.push_back(a[static_cast<std::size_t>(i)]);
        Scalar den(1);
        int cum = 0;
        for (int x : perm) {
            cum += x;
            den *= Scalar(1) - q.pow(cum);
        }
        sum += numer(perm) / den;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return sum;
}

std::vector<int> colengths_of(const std::vector<Partition>& profiles) {
    std::vector<int> a;
    for (const auto& p : profiles) {
        int l = colength(p);
        if (l < 1) throw error("profile " + to_string(p) + " has zero colength");
        a.push_back(l);
    }
    return a;
}

Partition colength_partition(const std::vector<Partition>& profiles) {
    Partition l = colengths_of(profiles);
    std::sort(l.begin(), l.end(), std::greater<>());
    return l;
}

Rational multiset_aut(const std::vector<Partition>& profiles) {
    std::map<Partition, int> mult;
    for (const auto& p : profiles) ++mult[p];
    Rational a(1);
    for (const auto& [p, m] : mult) a *= factorial(m);
    return a;
}

Scalar sign(long e) { return Scalar(e % 2 == 0 ? 1 : -1); }

} // namespace

Scalar strict_ordered_sum(const std::vector<int>& colengths, const Scalar& q) {
    const int k = static_cast<int>(colengths.size());
    return ordered_sum(colengths, q, [&](const std::vector<int>& perm) {
        long e = 0;
        for (int s = 0; s < k; ++s) e += static_cast<long>(k - 1 - s) * perm[static_cast<std::size_t>(s)];
        return q.pow(e);
    });
}

Scalar weak_ordered_sum(const std::vector<int>& colengths, const Scalar& q) {
    return ordered_sum(colengths, q, [](const std::vector<int>&) { return Scalar(1); });
}

Scalar weight_WE(const std::vector<Partition>& profiles, const Scalar& q) {
    if (profiles.empty()) throw error("weight_WE needs at least one profile");
    Partition lambda = colength_partition(profiles);
    return strict_ordered_sum(colengths_of(profiles), q) / Scalar(aut_order(lambda));
}

Scalar weight_WH(const std::vector<Partition>& profiles, const Scalar& q) {
    if (profiles.empty()) throw error("weight_WH needs at least one profile");
    Partition lambda = colength_partition(profiles);
    return sign(colength(lambda)) * weak_ordered_sum(colengths_of(profiles), q) / Scalar(aut_order(lambda));
}

int ColourGroup::colength() const {
    int s = class_I_colength();
    for (const auto& p : class_II) s += qhurwitz::colength(p);
    return s;
}

int ColourGroup::class_I_colength() const {
    int s = 0;
    for (const auto& p : class_I) s += qhurwitz::colength(p);
    return s;
}

std::vector<std::vector<Partition>> profile_multisets(int n, int j) {
    std::vector<Partition> profiles;
    for (const auto& p : enumerate_partitions(n))
        if (colength(p) > 0) profiles.push_back(p);
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < profiles.size(); ++i) {
            int l = colength(profiles[i]);
            if (l > left) continue;
            cur.push_back(profiles[i]);
            self(self, i, left - l);
            cur.pop_back();
        }
    };
    rec(rec, 0, j);
    return out;
}

std::vector<ColourGroup> colour_groups(int n, int j, FamilyKind kind) {
    std::vector<ColourGroup> out;
    if (j < 1) return out;
    const bool allow_I = kind != FamilyKind::complete && kind != FamilyKind::jack && kind != FamilyKind::classical;
    const bool allow_II = kind != FamilyKind::elementary;
    for (int e = 0; e <= j; ++e) {
        if (e > 0 && !allow_I) continue;
        if (e < j && !allow_II) continue;
        for (const auto& mi : profile_multisets(n, e))
            for (const auto& mii : profile_multisets(n, j - e)) out.push_back({mi, mii});
    }
    return out;
}

Scalar colour_group_weight(const ColourGroup& g, const WeightFamily& family) {
    const int j = g.colength();
    const long r = static_cast<long>(g.class_II.size());
    auto a_I = colengths_of(g.class_I);
    auto a_II = colengths_of(g.class_II);
    switch (family.kind) {
    case FamilyKind::macdonald:
    case FamilyKind::hall_littlewood: {
        Scalar q = family.kind == FamilyKind::macdonald ? family.params.q() : Scalar(0);
        return sign(j + r) * strict_ordered_sum(a_I, q) / Scalar(multiset_aut(g.class_I)) *
               weak_ordered_sum(a_II, q) / Scalar(multiset_aut(g.class_II));
    }
    case FamilyKind::elementary:
        if (!g.class_II.empty()) return Scalar(0);
        return strict_ordered_sum(a_I, family.params.q()) / Scalar(multiset_aut(g.class_I));
    case FamilyKind::complete:
        if (!g.class_I.empty()) return Scalar(0);
        return sign(j + r) * weak_ordered_sum(a_II, family.params.q()) / Scalar(multiset_aut(g.class_II));
    case FamilyKind::classical:
        if (!g.class_I.empty()) return Scalar(0);
        return sign(j + r) * Scalar(factorial(r) / multiset_aut(g.class_II));
    case FamilyKind::jack: {
        if (!g.class_I.empty()) return Scalar(0);
        Scalar x = -family.params.alpha().inverse();
        Scalar falling(1);
        for (long i = 0; i < r; ++i) falling *= x - Scalar(i);
        return sign(j) * falling / Scalar(multiset_aut(g.class_II));
    }
    }
    throw error("unknown family");
}

namespace {

struct WeightedGroup {
    Scalar weight;
    int e;
    std::vector<Rational> phi;  // Π over profiles of h_ρ χ_ρ(π) / z_π, indexed by irrep
};

void check_hurwitz_bounds(int n, int d) {
    if (n < 1 || d < 0) throw error("need n >= 1 and d >= 0");
    if (n > kHurwitzMaxN)
        throw bound_exceeded("n exceeds enumeration bound (" + std::to_string(n) + " > " +
                             std::to_string(kHurwitzMaxN) + ")");
    if (d > kHurwitzMaxD)
        throw bound_exceeded("d exceeds enumeration bound (" + std::to_string(d) + " > " +
                             std::to_string(kHurwitzMaxD) + ")");
}

} // namespace

HurwitzTable hde_geometric(int n, int d, int e, const WeightFamily& family) {
    check_hurwitz_bounds(n, d);
    const auto& ct = char_table(n);
    const std::size_t nirr = ct.irreps.size();
    std::vector<Rational> h;
    for (const auto& rho : ct.irreps) h.push_back(hook_product(rho));

    std::vector<std::vector<WeightedGroup>> groups(static_cast<std::size_t>(d + 1));
    for (int j = 1; j <= d; ++j)
        for (const auto& g : colour_groups(n, j, family.kind)) {
            Scalar w = colour_group_weight(g, family);
            if (w.is_zero()) continue;
            std::vector<Rational> phi(nirr, Rational(1));
            for (const auto* list : {&g.class_I, &g.class_II})
                for (const auto& p : *list)
                    for (std::size_t r = 0; r < nirr; ++r)
                        phi[r] *= h[r] * Rational(ct.value(ct.irreps[r], p)) / z_mu(p);
            groups[static_cast<std::size_t>(j)].push_back({w, g.class_I_colength(), std::move(phi)});
        }

    std::vector<Scalar> acc(nirr, Scalar(0));
    if (e >= 0 && e <= d) {
        for (const auto& lambda : enumerate_partitions(d)) {
            if (length(lambda) > static_cast<int>(family.c.size())) continue;
            Scalar mc = SymFunc::element(Basis::m, lambda).eval(family.c);
            if (mc.is_zero()) continue;
            // Ordered tuples (G_1, ..., G_ℓ) with colength(G_i) = λ_i.
            auto rec = [&](auto&& self, std::size_t i, int e_left, const Scalar& w,
                           const std::vector<Rational>& phi) -> void {
                if (i == lambda.size()) {
                    if (e_left != 0) return;
                    for (std::size_t r = 0; r < nirr; ++r)
                        if (!phi[r].is_zero()) acc[r] += mc * w * Scalar(phi[r]);
                    return;
                }
                for (const auto& g : groups[static_cast<std::size_t>(lambda[i])]) {
                    if (g.e > e_left) continue;
                    std::vector<Rational> next(nirr);
                    for (std::size_t r = 0; r < nirr; ++r) next[r] = phi[r] * g.phi[r];
                    self(self, i + 1, e_left - g.e, w * g.weight, next);
                }
            };
            rec(rec, 0, e, Scalar(1), std::vector<Rational>(nirr, Rational(1)));
        }
    }

    HurwitzTable out;
    for (const auto& mu : enumerate_partitions(n))
        for (const auto& nu : enumerate_partitions(n)) {
            // H(profiles, μ, ν) = Σ_ρ h_ρ^{-2} Π_all (h_ρ χ_ρ / z).
            Scalar s(0);
            for (std::size_t r = 0; r < nirr; ++r) {
                long a = ct.value(ct.irreps[r], mu) * ct.value(ct.irreps[r], nu);
                if (a != 0 && !acc[r].is_zero()) s += acc[r] * Scalar(Rational(a) / (z_mu(mu) * z_mu(nu)));
            }
            out.emplace(std::make_pair(mu, nu), s);
        }
    return out;
}

HurwitzTable fd_character(int n, int d, const WeightFamily& family) {
    if (n < 1 || d < 0) throw error("need n >= 1 and d >= 0");
    if (n > kCharacterRouteMaxN || d > kCharacterRouteMaxD)
        throw bound_exceeded("n exceeds enumeration bound (n <= " + std::to_string(kCharacterRouteMaxN) +
                             ", d <= " + std::to_string(kCharacterRouteMaxD) + ")");
    auto parts = enumerate_partitions(n);
    CentralElement m(n, CentralBasis::F);
    for (const auto& lambda : parts)
        m.add(lambda, r_lambda(lambda, 0, family, static_cast<unsigned>(d)).series[static_cast<unsigned>(d)]);
    std::vector<CentralElement> rows(parts.size(), CentralElement(n, CentralBasis::C));
    parallel_for(parts.size(), [&](std::size_t i) {
        rows[i] = central_multiply(m, CentralElement::class_sum(parts[i])).convert(CentralBasis::C);
    });
    HurwitzTable out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& nu : parts)
            out.emplace(std::make_pair(parts[i], nu), rows[i].coeff(nu) / Scalar(z_mu(nu)));
    return out;
}

CheckReport gj_cycle_expansion_check(int n, int j, const ParamSpace& ps) {
    if (n < 1 || j < 0) throw error("need n >= 1 and j >= 0");
    if (n > kHurwitzMaxN || j > kHurwitzMaxD)
        throw bound_exceeded("gj check bound exceeded (n <= " + std::to_string(kHurwitzMaxN) +
                             ", j <= " + std::to_string(kHurwitzMaxD) + ")");
    WeightFamily family(FamilyKind::macdonald, {Rational(1)}, ps);
    CentralElement lhs = jm_symmetric_apply(SymFunc::element(Basis::g, j == 0 ? Partition{} : Partition{j}, ps), n)
                             .convert(CentralBasis::C);
    CentralElement rhs = j == 0 ? CentralElement::identity(n) : CentralElement(n, CentralBasis::C);
    for (const auto& g : colour_groups(n, j, FamilyKind::macdonald)) {
        Scalar w = colour_group_weight(g, family) * ps.t().pow(g.class_I_colength());
        CentralElement prod = CentralElement::identity(n);
        for (const auto* list : {&g.class_I, &g.class_II})
            for (const auto& p : *list) prod = central_multiply(prod, CentralElement::class_sum(p));
        rhs += prod.scaled(w);
    }
    rhs = rhs.convert(CentralBasis::C);
    CheckReport rep;
    for (const auto& mu : enumerate_partitions(n)) {
        Scalar a = lhs.coeff(mu), b = rhs.coeff(mu);
        bool same = a == b;
        rep.ok = rep.ok && same;
        rep.report += "n=" + std::to_string(n) + " j=" + std::to_string(j) + " C" + to_string(mu) + ": " +
                      a.to_string() + (same ? " == " : " != ") + b.to_string() + "\n";
    }
    return rep;
}

} // namespace qhurwitz
