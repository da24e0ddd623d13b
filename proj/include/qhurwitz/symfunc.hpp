#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhurwitz/params.hpp"
#include "qhurwitz/partition.hpp"
#include "qhurwitz/zseries.hpp"

namespace qhurwitz {

/// p: power sums, m: monomials, s: Schur, P: Macdonald P(q,t), g: products of
/// g_j(q,t), hl_q: Hall–Littlewood q_λ(t), jack_g: g^α_λ.
enum class Basis { p, m, s, P, g, hl_q, jack_g };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

inline constexpr int kDefaultSymDegreeBound = 8;

/// Homogeneous symmetric function of fixed degree as a coefficient map in one basis.
class SymFunc {
public:
    using Coeffs = std::map<Partition, Scalar, RevLex>;

    SymFunc(int degree, Basis basis, ParamSpace ps = ParamSpace());
    static SymFunc element(Basis basis, const Partition& lambda, ParamSpace ps = ParamSpace());

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const ParamSpace& params() const { return ps_; }
    const Coeffs& coeffs() const { return coeffs_; }
    /// Zero when absent.
    Scalar coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const Scalar& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc scaled(const Scalar& c) const;
    /// Product, returned in the p basis.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    friend bool operator==(const SymFunc& a, const SymFunc& b);

    SymFunc convert(Basis target) const;
    /// Value at the finite variable list c, via p_μ(c) = Π_i Σ_k c_k^μ_i.
    Scalar eval(const std::vector<Rational>& c) const;
    /// Value under p_k ↦ value(k) for every k.
    template <typename F>
    Scalar eval_powersums(F value) const;

    /// {"degree":2,"basis":"m","coeffs":{"[2]":"1","[1,1]":"..."}}
    std::string to_json() const;

private:
    int degree_;
    Basis basis_;
    ParamSpace ps_;
    Coeffs coeffs_;
};

Scalar power_sum(int k, const std::vector<Rational>& c);
Scalar p_mu_value(const Partition& mu, const std::vector<Rational>& c);

/// (f, g)_{q,t} with (p_λ, p_μ) = δ z_λ(q,t).
Scalar scalar_product_qt(const SymFunc& f, const SymFunc& g);

/// Macdonald P_λ in the m basis; cached per (degree, parameter space).
SymFunc macdonald_P(const Partition& lambda, const ParamSpace& ps = ParamSpace());
/// b_λ(q,t) = 1 / (P_λ, P_λ)_{q,t}.
Scalar macdonald_b(const Partition& lambda, const ParamSpace& ps = ParamSpace());

/// g_j(c,q,t) = Σ_{|μ|=j} z_μ(q,t)^{-1} p_μ(c) for j = 0..D.
ZSeries g_j_series(const std::vector<Rational>& c, unsigned order, const ParamSpace& ps = ParamSpace());
Scalar g_lambda_value(const Partition& lambda, const std::vector<Rational>& c, const ParamSpace& ps = ParamSpace());
/// q_λ(c,t): g_λ with q = 0.
Scalar hl_q_lambda(const Partition& lambda, const std::vector<Rational>& c, const ParamSpace& ps = ParamSpace(Context{Param::t}));
/// g^α_λ(c): product of z^j coefficients of Π_i (1 - z c_i)^{-1/α}.
Scalar jack_g_lambda(const Partition& lambda, const std::vector<Rational>& c,
                     const ParamSpace& ps = ParamSpace(Context{Param::alpha}));
/// Π_i (1 - z c_i)^{-1/α} from the generalized binomial series.
ZSeries jack_series(const std::vector<Rational>& c, unsigned order, const ParamSpace& ps);

/// Transition matrix row: basis element B_λ expanded in power sums.
SymFunc to_powersum(Basis b, const Partition& lambda, const ParamSpace& ps);

template <typename F>
Scalar SymFunc::eval_powersums(F value) const {
    SymFunc pf = convert(Basis::p);
    Scalar sum(0);
    for (const auto& [mu, c] : pf.coeffs()) {
        Scalar term = c;
        for (int k : mu) term *= value(k);
        sum += term;
    }
    return sum;
}

} // namespace qhurwitz
