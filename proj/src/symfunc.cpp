#include "qhurwitz/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

#include <json.hpp>

#include "qhurwitz/characters.hpp"
#include "qhurwitz/errors.hpp"

namespace qhurwitz {

std::string basis_name(Basis b) {
    switch (b) {
    case Basis::p: return "p";
    case Basis::m: return "m";
    case Basis::s: return "s";
    case Basis::P: return "P";
    case Basis::g: return "g";
    case Basis::hl_q: return "q_HL";
    case Basis::jack_g: return "g_alpha";
    }
    return "?";
}

Basis basis_from_name(const std::string& name) {
    for (auto b : {Basis::p, Basis::m, Basis::s, Basis::P, Basis::g, Basis::hl_q, Basis::jack_g})
        if (basis_name(b) == name) return b;
    throw error("unknown basis '" + name + "'");
}

namespace {

void check_degree(int n) {
    if (n < 0) throw error("negative degree");
    if (n > kDefaultSymDegreeBound)
        throw bound_exceeded("degree exceeds symmetric function bound (" + std::to_string(n) + " > " +
                             std::to_string(kDefaultSymDegreeBound) + ")");
}

// Number of ways to distribute the parts of lambda into blocks with the given sums.
long count_fillings(const Partition& lambda, std::size_t i, std::vector<int>& capacity) {
    if (i == lambda.size()) {
        for (int c : capacity)
            if (c) return 0;
        return 1;
    }
    long total = 0;
    for (auto& c : capacity) {
        if (c >= lambda[i]) {
            c -= lambda[i];
            total += count_fillings(lambda, i + 1, capacity);
            c += lambda[i];
        }
    }
    return total;
}

struct MonomialTransition {
    std::vector<Partition> parts;               // reverse-lex
    std::vector<std::vector<Rational>> p_to_m;  // p_λ = Σ R[λ][μ] m_μ
    std::vector<std::vector<Rational>> m_to_p;  // m_λ = Σ Rinv[λ][μ] p_μ
};

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw error("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational f = Rational(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= f;
            inv[col][j] *= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational g = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= g * a[col][j];
                inv[r][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

const MonomialTransition& monomial_transition(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<MonomialTransition>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
    auto t = std::make_unique<MonomialTransition>();
    t->parts = enumerate_partitions(n, kDefaultSymDegreeBound);
    const std::size_t k = t->parts.size();
    t->p_to_m.assign(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<int> cap(t->parts[j].begin(), t->parts[j].end());
            t->p_to_m[i][j] = Rational(count_fillings(t->parts[i], 0, cap));
        }
    t->m_to_p = invert(t->p_to_m);
    auto& ref = *t;
    cache.emplace(n, std::move(t));
    return ref;
}

std::size_t index_of(const std::vector<Partition>& parts, const Partition& p) {
    auto it = std::find(parts.begin(), parts.end(), p);
    if (it == parts.end()) throw error("partition " + to_string(p) + " not in index set");
    return static_cast<std::size_t>(it - parts.begin());
}

// B_λ = Π_i Σ_{μ⊢λ_i} z_μ^{-1} Π_k f(μ_k) p_μ, expanded in power sums.
SymFunc exp_family(Basis tag, const Partition& lambda, const ParamSpace& ps,
                   const std::function<Scalar(int)>& f) {
    SymFunc acc = SymFunc::element(Basis::p, Partition{}, ps);
    for (int j : lambda) {
        SymFunc bj(j, Basis::p, ps);
        for (const auto& mu : enumerate_partitions(j, kDefaultSymDegreeBound)) {
            Scalar c = Scalar(Rational(1) / z_mu(mu));
            for (int k : mu) c *= f(k);
            bj.add(mu, c);
        }
        acc = acc * bj;
    }
    (void)tag;
    return acc;
}

struct MacdonaldData {
    std::vector<Partition> parts;            // reverse-lex
    std::map<Partition, SymFunc, RevLex> p;  // in p basis
    std::map<Partition, SymFunc, RevLex> m;  // in m basis
    std::map<Partition, Scalar, RevLex> norm;
};

Scalar pairing(const SymFunc& f, const SymFunc& g, const std::map<Partition, Scalar, RevLex>& z) {
    Scalar s(0);
    const auto& small = f.coeffs().size() <= g.coeffs().size() ? f : g;
    const auto& large = &small == &f ? g : f;
    for (const auto& [mu, a] : small.coeffs()) {
        auto it = large.coeffs().find(mu);
        if (it == large.coeffs().end()) continue;
        s += a * it->second * z.at(mu);
    }
    return s;
}

const MacdonaldData& macdonald_data(int n, const ParamSpace& ps) {
    static std::mutex mutex;
    static std::map<std::pair<int, std::string>, std::unique_ptr<MacdonaldData>> cache;
    check_degree(n);
    auto key = std::make_pair(n, ps.key());
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto data = std::make_unique<MacdonaldData>();
    const auto& tr = monomial_transition(n);
    data->parts = tr.parts;
    std::map<Partition, Scalar, RevLex> z;
    for (const auto& mu : tr.parts) z.emplace(mu, z_mu_qt(mu, ps));
    std::vector<Partition> order(tr.parts.rbegin(), tr.parts.rend());
    std::vector<Partition> done;
    for (const auto& lambda : order) {
        SymFunc m_lambda = SymFunc::element(Basis::m, lambda, ps).convert(Basis::p);
        SymFunc v = m_lambda;
        for (const auto& nu : done) {
            if (!dominance_less(nu, lambda)) continue;
            Scalar c = pairing(m_lambda, data->p.at(nu), z) / data->norm.at(nu);
            if (c.is_zero()) continue;
            v -= data->p.at(nu).scaled(c);
        }
        data->norm.emplace(lambda, pairing(m_lambda, v, z));
        data->p.emplace(lambda, v);
        done.push_back(lambda);
    }
    for (const auto& lambda : tr.parts) {
        SymFunc out(n, Basis::m, ps);
        const SymFunc& v = data->p.at(lambda);
        for (std::size_t j = 0; j < tr.parts.size(); ++j) {
            Scalar c(0);
            for (const auto& [rho, a] : v.coeffs()) {
                const Rational& r = tr.p_to_m[index_of(tr.parts, rho)][j];
                if (!r.is_zero()) c += a * Scalar(r);
            }
            out.add(tr.parts[j], c);
        }
        data->m.emplace(lambda, std::move(out));
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(data));
    return *it->second;
}

// Coordinates of f (in p basis) with respect to rows (each in p basis), by elimination.
SymFunc solve_in_basis(const SymFunc& fp, Basis target, const std::vector<Partition>& parts,
                       const std::vector<SymFunc>& rows) {
    const std::size_t k = parts.size();
    // Augmented system: Σ_λ a_λ rows[λ][μ] = f[μ] for every μ.
    std::vector<std::vector<Scalar>> mat(k, std::vector<Scalar>(k + 1, Scalar(0)));
    for (std::size_t mu = 0; mu < k; ++mu) {
        for (std::size_t l = 0; l < k; ++l) mat[mu][l] = rows[l].coeff(parts[mu]);
        mat[mu][k] = fp.coeff(parts[mu]);
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && mat[piv][col].is_zero()) ++piv;
        if (piv == k) throw error("basis transition is singular");
        std::swap(mat[piv], mat[col]);
        Scalar inv = mat[col][col].inverse();
        for (std::size_t j = col; j <= k; ++j) mat[col][j] *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || mat[r][col].is_zero()) continue;
            Scalar g = mat[r][col];
            for (std::size_t j = col; j <= k; ++j)
                if (!mat[col][j].is_zero()) mat[r][j] -= g * mat[col][j];
        }
    }
    SymFunc out(fp.degree(), target, fp.params());
    for (std::size_t l = 0; l < k; ++l) out.add(parts[l], mat[l][k]);
    return out;
}

} // namespace

SymFunc::SymFunc(int degree, Basis basis, ParamSpace ps) : degree_(degree), basis_(basis), ps_(std::move(ps)) {
    check_degree(degree);
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, ParamSpace ps) {
    SymFunc f(weight(lambda), basis, std::move(ps));
    f.add(lambda, Scalar(1));
    return f;
}

Scalar SymFunc::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

void SymFunc::add(const Partition& lambda, const Scalar& c) {
    if (weight(lambda) != degree_)
        throw weight_mismatch("partition " + to_string(lambda) + " has weight other than " + std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.degree_ != degree_) throw weight_mismatch("degree mismatch in symmetric function sum");
    SymFunc other = o.basis_ == basis_ ? o : o.convert(basis_);
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += o.scaled(Scalar(-1)); }

SymFunc SymFunc::scaled(const Scalar& c) const {
    SymFunc r(degree_, basis_, ps_);
    for (const auto& [lambda, a] : coeffs_) r.add(lambda, a * c);
    return r;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc ap = a.convert(Basis::p), bp = b.convert(Basis::p);
    SymFunc r(a.degree_ + b.degree_, Basis::p, a.ps_);
    for (const auto& [mu, x] : ap.coeffs_)
        for (const auto& [nu, y] : bp.coeffs_) r.add(merge(mu, nu), x * y);
    return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.degree_ != b.degree_) return false;
    if (a.basis_ == b.basis_) return a.coeffs_ == b.coeffs_;
    return a.convert(Basis::p).coeffs_ == b.convert(Basis::p).coeffs_;
}

SymFunc to_powersum(Basis b, const Partition& lambda, const ParamSpace& ps) {
    const int n = weight(lambda);
    switch (b) {
    case Basis::p: return SymFunc::element(Basis::p, lambda, ps);
    case Basis::m: {
        const auto& tr = monomial_transition(n);
        SymFunc f(n, Basis::p, ps);
        const auto& row = tr.m_to_p[index_of(tr.parts, lambda)];
        for (std::size_t j = 0; j < tr.parts.size(); ++j) f.add(tr.parts[j], Scalar(row[j]));
        return f;
    }
    case Basis::s: {
        const auto& ct = char_table(n);
        SymFunc f(n, Basis::p, ps);
        for (const auto& mu : ct.classes) f.add(mu, Scalar(Rational(ct.value(lambda, mu)) / z_mu(mu)));
        return f;
    }
    case Basis::P: return macdonald_data(n, ps).p.at(lambda);
    case Basis::g:
        return exp_family(b, lambda, ps, [&](int k) {
            return (Scalar(1) - ps.t().pow(k)) / (Scalar(1) - ps.q().pow(k));
        });
    case Basis::hl_q:
        return exp_family(b, lambda, ps, [&](int k) { return Scalar(1) - ps.t().pow(k); });
    case Basis::jack_g:
        return exp_family(b, lambda, ps, [&](int) { return ps.alpha().inverse(); });
    }
    throw error("unknown basis");
}

SymFunc SymFunc::convert(Basis target) const {
    if (target == basis_) return *this;
    SymFunc fp(degree_, Basis::p, ps_);
    if (basis_ == Basis::p) {
        fp = *this;
    } else {
        for (const auto& [lambda, c] : coeffs_) {
            SymFunc row = to_powersum(basis_, lambda, ps_);
            for (const auto& [mu, a] : row.coeffs()) fp.add(mu, a * c);
        }
    }
    switch (target) {
    case Basis::p: return fp;
    case Basis::m: {
        const auto& tr = monomial_transition(degree_);
        SymFunc out(degree_, Basis::m, ps_);
        for (const auto& [lambda, c] : fp.coeffs()) {
            const auto& row = tr.p_to_m[index_of(tr.parts, lambda)];
            for (std::size_t j = 0; j < tr.parts.size(); ++j)
                if (!row[j].is_zero()) out.add(tr.parts[j], c * Scalar(row[j]));
        }
        return out;
    }
    case Basis::s: {
        const auto& ct = char_table(degree_);
        SymFunc out(degree_, Basis::s, ps_);
        for (const auto& [mu, c] : fp.coeffs())
            for (const auto& lambda : ct.irreps) {
                long chi = ct.value(lambda, mu);
                if (chi) out.add(lambda, c * Scalar(chi));
            }
        return out;
    }
    case Basis::P: {
        // Unitriangular in m: peel off leading terms from the dominance-maximal end.
        SymFunc fm = fp.convert(Basis::m);
        const auto& data = macdonald_data(degree_, ps_);
        SymFunc out(degree_, Basis::P, ps_);
        for (const auto& lambda : data.parts) {
            Scalar c = fm.coeff(lambda);
            if (c.is_zero()) continue;
            out.add(lambda, c);
            fm -= data.m.at(lambda).scaled(c);
        }
        return out;
    }
    default: {
        auto parts = enumerate_partitions(degree_, kDefaultSymDegreeBound);
        std::vector<SymFunc> rows;
        for (const auto& lambda : parts) rows.push_back(to_powersum(target, lambda, ps_));
        return solve_in_basis(fp, target, parts, rows);
    }
    }
}

Scalar power_sum(int k, const std::vector<Rational>& c) {
    Rational s(0);
    for (const auto& x : c) s += x.pow(k);
    return Scalar(s);
}

Scalar p_mu_value(const Partition& mu, const std::vector<Rational>& c) {
    Rational r(1);
    for (int k : mu) {
        Rational s(0);
        for (const auto& x : c) s += x.pow(k);
        r *= s;
    }
    return Scalar(r);
}

Scalar SymFunc::eval(const std::vector<Rational>& c) const {
    return eval_powersums([&](int k) { return power_sum(k, c); });
}

std::string SymFunc::to_json() const {
    nlohmann::ordered_json j;
    j["degree"] = degree_;
    j["basis"] = basis_name(basis_);
    nlohmann::ordered_json cs = nlohmann::ordered_json::object();
    for (const auto& [lambda, c] : coeffs_) cs[to_string(lambda)] = c.to_string();
    j["coeffs"] = cs;
    return j.dump();
}

Scalar scalar_product_qt(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) throw weight_mismatch("scalar product needs equal degrees");
    SymFunc fp = f.convert(Basis::p), gp = g.convert(Basis::p);
    Scalar s(0);
    for (const auto& [mu, a] : fp.coeffs()) {
        auto it = gp.coeffs().find(mu);
        if (it == gp.coeffs().end()) continue;
        s += a * it->second * z_mu_qt(mu, f.params());
    }
    return s;
}

SymFunc macdonald_P(const Partition& lambda, const ParamSpace& ps) {
    return macdonald_data(weight(lambda), ps).m.at(lambda);
}

Scalar macdonald_b(const Partition& lambda, const ParamSpace& ps) {
    return macdonald_data(weight(lambda), ps).norm.at(lambda).inverse();
}

namespace {

Scalar g_j_value(int j, const std::vector<Rational>& c, const ParamSpace& ps,
                 const std::function<Scalar(int)>& f) {
    Scalar s(0);
    for (const auto& mu : enumerate_partitions(j, kDefaultSymDegreeBound)) {
        Scalar term = Scalar(Rational(1) / z_mu(mu)) * p_mu_value(mu, c);
        if (term.is_zero()) continue;
        for (int k : mu) term *= f(k);
        s += term;
    }
    (void)ps;
    return s;
}

} // namespace

ZSeries g_j_series(const std::vector<Rational>& c, unsigned order, const ParamSpace& ps) {
    std::vector<Scalar> coeffs;
    auto f = [&](int k) { return (Scalar(1) - ps.t().pow(k)) / (Scalar(1) - ps.q().pow(k)); };
    for (unsigned j = 0; j <= order; ++j) coeffs.push_back(g_j_value(static_cast<int>(j), c, ps, f));
    return ZSeries::from_coeffs(std::move(coeffs), order);
}

Scalar g_lambda_value(const Partition& lambda, const std::vector<Rational>& c, const ParamSpace& ps) {
    auto f = [&](int k) { return (Scalar(1) - ps.t().pow(k)) / (Scalar(1) - ps.q().pow(k)); };
    Scalar r(1);
    for (int j : lambda) r *= g_j_value(j, c, ps, f);
    return r;
}

Scalar hl_q_lambda(const Partition& lambda, const std::vector<Rational>& c, const ParamSpace& ps) {
    auto f = [&](int k) { return Scalar(1) - ps.t().pow(k); };
    Scalar r(1);
    for (int j : lambda) r *= g_j_value(j, c, ps, f);
    return r;
}

ZSeries jack_series(const std::vector<Rational>& c, unsigned order, const ParamSpace& ps) {
    Scalar x = -ps.alpha().inverse();
    // binom(x, k) for k = 0..order
    std::vector<Scalar> binom{Scalar(1)};
    for (unsigned k = 1; k <= order; ++k)
        binom.push_back(binom.back() * (x - Scalar(static_cast<long>(k) - 1)) / Scalar(static_cast<long>(k)));
    ZSeries r = ZSeries::constant(Scalar(1), order);
    for (const auto& ci : c) {
        std::vector<Scalar> coeffs;
        Rational pw(1);
        for (unsigned k = 0; k <= order; ++k) {
            coeffs.push_back(binom[k] * Scalar(pw));
            pw *= -ci;
        }
        r = r * ZSeries::from_coeffs(std::move(coeffs), order);
    }
    return r;
}

Scalar jack_g_lambda(const Partition& lambda, const std::vector<Rational>& c, const ParamSpace& ps) {
    unsigned top = lambda.empty() ? 0 : static_cast<unsigned>(lambda.front());
    ZSeries s = jack_series(c, top, ps);
    Scalar r(1);
    for (int j : lambda) r *= s[static_cast<unsigned>(j)];
    return r;
}

} // namespace qhurwitz
