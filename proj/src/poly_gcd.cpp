#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "qhurwitz/errors.hpp"
#include "qhurwitz/poly.hpp"

namespace qhurwitz {

namespace {

struct ZTerm {
    Monomial mono;
    mpz_class c;
};

// Integer polynomial, ascending graded-lex, no zero coefficients.
using ZPoly = std::vector<ZTerm>;

void sort_merge(ZPoly& p) {
    std::sort(p.begin(), p.end(), [](const ZTerm& a, const ZTerm& b) { return a.mono < b.mono; });
    ZPoly out;
    out.reserve(p.size());
    for (auto& t : p) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && out.back().c == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    p = std::move(out);
}

ZPoly zconst(const mpz_class& c) {
    if (c == 0) return {};
    return {{Monomial(), c}};
}

ZPoly add(const ZPoly& a, const ZPoly& b, int sign = 1) {
    ZPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            out.push_back({b[j].mono, sign > 0 ? b[j].c : mpz_class(-b[j].c)});
            ++j;
        } else {
            mpz_class c = sign > 0 ? mpz_class(a[i].c + b[j].c) : mpz_class(a[i].c - b[j].c);
            if (c != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    std::unordered_map<std::uint64_t, mpz_class> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) {
            auto& slot = acc[(x.mono * y.mono).bits()];
            mpz_addmul(slot.get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
        }
    ZPoly out;
    out.reserve(acc.size());
    for (auto& [bits, c] : acc)
        if (c != 0) out.push_back({Monomial::from_bits(bits), std::move(c)});
    std::sort(out.begin(), out.end(), [](const ZTerm& x, const ZTerm& y) { return x.mono < y.mono; });
    return out;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    ZPoly out = a;
    for (auto& t : out) t.c *= c;
    return out;
}

ZPoly div_scalar(const ZPoly& a, const mpz_class& c) {
    ZPoly out = a;
    for (auto& t : out) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
    return out;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& t : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpz_class max_norm(const ZPoly& a) {
    mpz_class m = 0;
    for (const auto& t : a) {
        if (mpz_cmpabs(t.c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.c);
    }
    return m;
}

unsigned zdegree(const ZPoly& a, Param v) {
    unsigned d = 0;
    for (const auto& t : a) d = std::max(d, t.mono.exponent(v));
    return d;
}

std::vector<Param> zvariables(const ZPoly& a, const ZPoly& b) {
    std::vector<Param> out;
    for (auto p : kAllParams)
        if (zdegree(a, p) > 0 || zdegree(b, p) > 0) out.push_back(p);
    return out;
}

// Coefficient of the term that is largest when v dominates the order.
const mpz_class& main_leading_coeff(const ZPoly& a, Param v) {
    const ZTerm* best = &a.front();
    for (const auto& t : a) {
        unsigned e = t.mono.exponent(v), be = best->mono.exponent(v);
        if (e > be || (e == be && best->mono < t.mono)) best = &t;
    }
    return best->c;
}

bool quick_reject(const ZPoly& f, const ZPoly& h) {
    if (!h.back().mono.divides(f.back().mono)) return true;
    if (!h.front().mono.divides(f.front().mono)) return true;
    if (!mpz_divisible_p(f.back().c.get_mpz_t(), h.back().c.get_mpz_t())) return true;
    if (!mpz_divisible_p(f.front().c.get_mpz_t(), h.front().c.get_mpz_t())) return true;
    for (auto p : kAllParams)
        if (zdegree(h, p) > zdegree(f, p)) return true;
    return false;
}

// Exact quotient f/h over Z, or nullopt.
std::optional<ZPoly> zdivide(const ZPoly& f, const ZPoly& h) {
    if (h.empty()) throw division_by_zero();
    if (f.empty()) return ZPoly{};
    if (quick_reject(f, h)) return std::nullopt;
    std::map<Monomial, mpz_class> rem;
    for (const auto& t : f) rem.emplace(t.mono, t.c);
    const ZTerm& lh = h.back();
    ZPoly q;
    mpz_class qc;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        if (!lh.mono.divides(it->first)) return std::nullopt;
        if (!mpz_divisible_p(it->second.get_mpz_t(), lh.c.get_mpz_t())) return std::nullopt;
        Monomial m = it->first / lh.mono;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lh.c.get_mpz_t());
        for (const auto& t : h) {
            Monomial tm = t.mono * m;
            auto [slot, inserted] = rem.try_emplace(tm, 0);
            mpz_submul(slot->second.get_mpz_t(), qc.get_mpz_t(), t.c.get_mpz_t());
            if (slot->second == 0) rem.erase(slot);
        }
        q.push_back({m, qc});
    }
    std::reverse(q.begin(), q.end());
    return q;
}

ZPoly eval_at(const ZPoly& f, Param v, const mpz_class& x) {
    unsigned d = zdegree(f, v);
    std::vector<mpz_class> pw(d + 1);
    pw[0] = 1;
    for (unsigned k = 1; k <= d; ++k) pw[k] = pw[k - 1] * x;
    ZPoly out;
    out.reserve(f.size());
    for (const auto& t : f) {
        unsigned e = t.mono.exponent(v);
        out.push_back({t.mono.with_exponent(v, 0), t.c * pw[e]});
    }
    sort_merge(out);
    return out;
}

// Recover a polynomial in v from its image at v = x via symmetric x-adic digits.
ZPoly interpolate(ZPoly h, Param v, const mpz_class& x) {
    ZPoly out;
    mpz_class half = x / 2;
    unsigned i = 0;
    while (!h.empty()) {
        ZPoly g;
        for (const auto& t : h) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), t.c.get_mpz_t(), x.get_mpz_t());
            if (r > half) r -= x;
            if (r != 0) g.push_back({t.mono, r});
        }
        for (const auto& t : g) out.push_back({t.mono.with_exponent(v, i), t.c});
        h = add(h, g, -1);
        for (auto& t : h) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), x.get_mpz_t());
        ++i;
    }
    sort_merge(out);
    if (!out.empty() && main_leading_coeff(out, v) < 0)
        for (auto& t : out) t.c = -t.c;
    return out;
}

struct HeuResult {
    ZPoly h, cff, cfg;
};

std::optional<HeuResult> heu_gcd(ZPoly f, ZPoly g) {
    auto vars = zvariables(f, g);
    if (vars.empty()) {
        mpz_class a = f.empty() ? mpz_class(0) : f[0].c;
        mpz_class b = g.empty() ? mpz_class(0) : g[0].c;
        mpz_class h;
        mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return HeuResult{zconst(h), zconst(a / h), zconst(b / h)};
    }
    Param v = vars.back();

    mpz_class gc;
    mpz_class cf = content(f), cg = content(g);
    mpz_gcd(gc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    f = div_scalar(f, gc);
    g = div_scalar(g, gc);

    mpz_class fn = max_norm(f), gn = max_norm(g);
    mpz_class b = 2 * std::min(fn, gn) + 29;
    mpz_class sb = sqrt(b);
    mpz_class x = std::min(b, mpz_class(99 * sb));
    mpz_class lf = abs(main_leading_coeff(f, v)), lg = abs(main_leading_coeff(g, v));
    mpz_class alt = 2 * std::min(mpz_class(fn / lf), mpz_class(gn / lg)) + 2;
    x = std::max(x, alt);

    for (int attempt = 0; attempt < 6; ++attempt) {
        ZPoly ff = eval_at(f, v, x), gg = eval_at(g, v, x);
        if (!ff.empty() && !gg.empty()) {
            auto sub = heu_gcd(ff, gg);
            if (!sub) return std::nullopt;
            ZPoly h = interpolate(sub->h, v, x);
            mpz_class hc = content(h);
            h = div_scalar(h, hc);
            if (auto cff = zdivide(f, h)) {
                if (auto cfg = zdivide(g, h)) return HeuResult{scale(h, gc), *cff, *cfg};
            }
            ZPoly cff = interpolate(sub->cff, v, x);
            if (!cff.empty()) {
                if (auto hh = zdivide(f, cff)) {
                    if (auto cfg = zdivide(g, *hh)) return HeuResult{scale(*hh, gc), cff, *cfg};
                }
            }
            ZPoly cfg = interpolate(sub->cfg, v, x);
            if (!cfg.empty()) {
                if (auto hh = zdivide(g, cfg)) {
                    if (auto cff2 = zdivide(f, *hh)) return HeuResult{scale(*hh, gc), *cff2, cfg};
                }
            }
        }
        mpz_class r = sqrt(mpz_class(sqrt(x)));
        x = 73794 * x * r / 27011;
    }
    return std::nullopt;
}

// --- subresultant remainder sequence --------------------------------------

ZPoly zgcd_prs(const ZPoly& f, const ZPoly& g);

// Dense representation in v: coefficient polynomials free of v.
using UPoly = std::vector<ZPoly>;

UPoly to_dense(const ZPoly& f, Param v) {
    UPoly out(zdegree(f, v) + 1);
    for (const auto& t : f) out[t.mono.exponent(v)].push_back({t.mono.with_exponent(v, 0), t.c});
    for (auto& c : out) sort_merge(c);
    return out;
}

ZPoly from_dense(const UPoly& u, Param v) {
    ZPoly out;
    for (std::size_t k = 0; k < u.size(); ++k)
        for (const auto& t : u[k]) out.push_back({t.mono.with_exponent(v, static_cast<unsigned>(k)), t.c});
    sort_merge(out);
    return out;
}

void trim(UPoly& u) {
    while (!u.empty() && u.back().empty()) u.pop_back();
}

UPoly prem(UPoly a, const UPoly& b) {
    const std::size_t n = b.size() - 1;
    const ZPoly& lb = b.back();
    trim(a);
    if (a.size() < b.size()) return a;
    int e = static_cast<int>(a.size() - b.size()) + 1;
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - 1 - n;
        ZPoly lr = a.back();
        for (auto& c : a) c = mul(c, lb);
        for (std::size_t k = 0; k <= n; ++k) a[k + shift] = add(a[k + shift], mul(lr, b[k]), -1);
        trim(a);
        --e;
    }
    if (e > 0) {
        ZPoly m = zconst(1);
        for (int k = 0; k < e; ++k) m = mul(m, lb);
        for (auto& c : a) c = mul(c, m);
    }
    return a;
}

ZPoly zpow(const ZPoly& a, unsigned e) {
    ZPoly r = zconst(1);
    for (unsigned k = 0; k < e; ++k) r = mul(r, a);
    return r;
}

ZPoly exact(const ZPoly& a, const ZPoly& b) {
    auto q = zdivide(a, b);
    if (!q) throw error("internal: inexact division in remainder sequence");
    return *q;
}

ZPoly content_in(const ZPoly& f, Param v) {
    UPoly u = to_dense(f, v);
    ZPoly c;
    for (const auto& k : u) {
        if (k.empty()) continue;
        c = zgcd_prs(c, k);
        if (c.size() == 1 && c[0].mono.is_one() && c[0].c == 1) break;
    }
    return c;
}

ZPoly normalize_sign(ZPoly p) {
    if (!p.empty() && p.front().c < 0)
        for (auto& t : p) t.c = -t.c;
    return p;
}

ZPoly zgcd_prs(const ZPoly& f, const ZPoly& g) {
    if (f.empty()) return normalize_sign(g);
    if (g.empty()) return normalize_sign(f);
    auto vars = zvariables(f, g);
    if (vars.empty()) {
        mpz_class h;
        mpz_gcd(h.get_mpz_t(), f[0].c.get_mpz_t(), g[0].c.get_mpz_t());
        return zconst(h);
    }
    Param v = vars.back();
    if (zdegree(f, v) == 0) return zgcd_prs(f, content_in(g, v));
    if (zdegree(g, v) == 0) return zgcd_prs(content_in(f, v), g);
    ZPoly cf = content_in(f, v), cg = content_in(g, v);
    ZPoly c = zgcd_prs(cf, cg);
    UPoly a = to_dense(exact(f, cf), v), b = to_dense(exact(g, cg), v);
    if (a.size() < b.size()) std::swap(a, b);

    ZPoly gg = zconst(1), h = zconst(1);
    UPoly last;
    for (;;) {
        unsigned delta = static_cast<unsigned>(a.size() - b.size());
        UPoly r = prem(a, b);
        if (r.empty()) {
            last = b;
            break;
        }
        if (r.size() == 1) return normalize_sign(c);
        a = b;
        ZPoly d = mul(gg, zpow(h, delta));
        for (auto& k : r) k = exact(k, d);
        b = std::move(r);
        gg = a.back();
        if (delta == 0) {
        } else if (delta == 1) {
            h = gg;
        } else {
            h = exact(zpow(gg, delta), zpow(h, delta - 1));
        }
    }
    ZPoly r = from_dense(last, v);
    r = exact(r, content_in(r, v));
    return normalize_sign(mul(c, r));
}

// --- conversion -------------------------------------------------------------

ZPoly to_primitive_z(const Poly& p) {
    mpz_class l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.raw().get_den_mpz_t());
    ZPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        mpz_class c = l / t.coeff.raw().get_den() * t.coeff.raw().get_num();
        out.push_back({t.mono, c});
    }
    return div_scalar(out, content(out));
}

Poly from_z_normalized(const ZPoly& z, Context ctx) {
    std::vector<Term> terms;
    terms.reserve(z.size());
    Rational inv = Rational(1) / Rational(z.front().c);
    for (const auto& t : z) terms.push_back({t.mono, Rational(t.c) * inv});
    return Poly::from_terms(ctx, std::move(terms));
}

Poly normalized(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.trailing().coeff);
}

std::optional<Poly> trivial_gcd(const Poly& a, const Poly& b, Context ctx) {
    if (a.is_zero()) return normalized(b).with_context(ctx);
    if (b.is_zero()) return normalized(a).with_context(ctx);
    if (a.is_constant() || b.is_constant()) return Poly::constant(ctx, Rational(1));
    if (a.is_monomial() || b.is_monomial()) {
        const Poly& m = a.is_monomial() ? a : b;
        const Poly& o = a.is_monomial() ? b : a;
        Monomial g = m.leading().mono;
        for (const auto& t : o.terms()) g = Monomial::gcd(g, t.mono);
        return Poly::constant(ctx, Rational(1)).times_monomial(g, Rational(1)).with_context(ctx);
    }
    if (a == b) return normalized(a).with_context(ctx);
    return std::nullopt;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    Context ctx = unify(a.context(), b.context());
    if (auto t = trivial_gcd(a, b, ctx)) return *t;
    ZPoly za = to_primitive_z(a), zb = to_primitive_z(b);
    if (auto r = heu_gcd(za, zb)) return from_z_normalized(r->h, ctx);
    return from_z_normalized(zgcd_prs(za, zb), ctx);
}

Poly gcd_subresultant(const Poly& a, const Poly& b) {
    Context ctx = unify(a.context(), b.context());
    if (auto t = trivial_gcd(a, b, ctx)) return *t;
    return from_z_normalized(zgcd_prs(to_primitive_z(a), to_primitive_z(b)), ctx);
}

} // namespace qhurwitz
