#include "qhurwitz/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "qhurwitz/errors.hpp"

namespace qhurwitz {

std::string_view param_name(Param p) {
    switch (p) {
    case Param::q: return "q";
    case Param::t: return "t";
    case Param::alpha: return "alpha";
    case Param::u: return "u";
    }
    return "?";
}

std::optional<Param> param_from_name(std::string_view name) {
    if (name == "q") return Param::q;
    if (name == "t") return Param::t;
    if (name == "alpha" || name == "\xce\xb1") return Param::alpha;
    if (name == "u") return Param::u;
    return std::nullopt;
}

Context::Context(std::initializer_list<Param> params) {
    for (auto p : params) mask_ |= static_cast<std::uint8_t>(1u << static_cast<int>(p));
}

std::vector<Param> Context::params() const {
    std::vector<Param> out;
    for (auto p : kAllParams)
        if (contains(p)) out.push_back(p);
    return out;
}

std::string Context::to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto p : params()) {
        if (!first) s += ",";
        s += param_name(p);
        first = false;
    }
    return s + "}";
}

Context unify(Context a, Context b) {
    if (a == b || b.empty()) return a;
    if (a.empty()) return b;
    throw context_mismatch("cannot combine values over parameter sets " + a.to_string() + " and " +
                           b.to_string());
}

// ---------------------------------------------------------------------------

Monomial Monomial::of(Param p, unsigned e) {
    Monomial m;
    m.bits_ = static_cast<std::uint64_t>(e) << shift(p);
    return m;
}

unsigned Monomial::degree() const {
    return static_cast<unsigned>((bits_ & 0xffff) + ((bits_ >> 16) & 0xffff) +
                                 ((bits_ >> 32) & 0xffff) + ((bits_ >> 48) & 0xffff));
}

bool Monomial::divides(Monomial o) const {
    for (auto p : kAllParams)
        if (exponent(p) > o.exponent(p)) return false;
    return true;
}

Monomial Monomial::with_exponent(Param p, unsigned e) const {
    Monomial m;
    m.bits_ = (bits_ & ~(std::uint64_t{0xffff} << shift(p))) | (static_cast<std::uint64_t>(e) << shift(p));
    return m;
}

Monomial operator*(Monomial a, Monomial b) {
    Monomial m;
    m.bits_ = a.bits_ + b.bits_;
    return m;
}

Monomial operator/(Monomial a, Monomial b) {
    Monomial m;
    m.bits_ = a.bits_ - b.bits_;
    return m;
}

std::strong_ordering operator<=>(Monomial a, Monomial b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    return a.bits_ <=> b.bits_;
}

Monomial Monomial::gcd(Monomial a, Monomial b) {
    Monomial m;
    for (auto p : kAllParams) m = m.with_exponent(p, std::min(a.exponent(p), b.exponent(p)));
    return m;
}

// ---------------------------------------------------------------------------

Poly Poly::constant(Context ctx, const Rational& c) {
    Poly p(ctx);
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
}

Poly Poly::variable(Context ctx, Param v) {
    if (!ctx.contains(v))
        throw context_mismatch(std::string("parameter ") + std::string(param_name(v)) +
                               " is not part of " + ctx.to_string());
    Poly p(ctx);
    p.terms_.push_back({Monomial::of(v), Rational(1)});
    return p;
}

Poly Poly::from_terms(Context ctx, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    Poly p(ctx);
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    return p;
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
    return Rational(0);
}

unsigned Poly::degree(Param p) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(p));
    return d;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.back().mono.degree(); }

std::vector<Param> Poly::variables() const {
    std::vector<Param> out;
    for (auto p : kAllParams)
        if (degree(p) > 0) out.push_back(p);
    return out;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

template <typename Sign>
void merge_into(std::vector<Term>& out, const std::vector<Term>& a, const std::vector<Term>& b,
                Sign sign) {
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            out.push_back({b[j].mono, sign(b[j].coeff)});
            ++j;
        } else {
            Rational c = a[i].coeff + sign(b[j].coeff);
            if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
}

} // namespace

Poly& Poly::operator+=(const Poly& o) {
    Context ctx = unify(ctx_, o.ctx_);
    std::vector<Term> out;
    merge_into(out, terms_, o.terms_, [](const Rational& c) { return c; });
    terms_ = std::move(out);
    ctx_ = ctx;
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    Context ctx = unify(ctx_, o.ctx_);
    std::vector<Term> out;
    merge_into(out, terms_, o.terms_, [](const Rational& c) { return -c; });
    terms_ = std::move(out);
    ctx_ = ctx;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Context ctx = unify(a.ctx_, b.ctx_);
    if (a.is_zero() || b.is_zero()) return Poly(ctx);
    if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff).with_context(ctx);
    if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff).with_context(ctx);
    std::unordered_map<std::uint64_t, mpq_class> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    mpq_class tmp;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            tmp = x.coeff.raw() * y.coeff.raw();
            acc[(x.mono * y.mono).bits()] += tmp;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [bits, c] : acc) {
        if (sgn(c) == 0) continue;
        terms.push_back({Monomial::from_bits(bits), Rational(c)});
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
    Poly r(ctx);
    r.terms_ = std::move(terms);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly(ctx_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::times_monomial(Monomial m, const Rational& c) const {
    if (c.is_zero()) return Poly(ctx_);
    Poly r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(ctx_, Rational(1));
    Poly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::coefficient(Param p, unsigned k) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.mono.exponent(p) == k) out.push_back({t.mono.with_exponent(p, 0), t.coeff});
    return from_terms(ctx_, std::move(out));
}

Poly Poly::with_context(Context ctx) const {
    for (auto p : variables())
        if (!ctx.contains(p))
            throw context_mismatch(std::string("parameter ") + std::string(param_name(p)) +
                                   " is not part of " + ctx.to_string());
    Poly r = *this;
    r.ctx_ = ctx;
    return r;
}

Rational Poly::eval(const Assignment& a) const {
    std::array<std::vector<Rational>, kParamCount> powers;
    for (auto p : variables()) {
        auto it = a.find(p);
        if (it == a.end())
            throw error(std::string("assignment does not cover parameter ") + std::string(param_name(p)));
        auto& pw = powers[static_cast<int>(p)];
        unsigned d = degree(p);
        pw.reserve(d + 1);
        pw.emplace_back(1);
        for (unsigned k = 1; k <= d; ++k) pw.push_back(pw.back() * it->second);
    }
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (auto p : kAllParams) {
            unsigned e = t.mono.exponent(p);
            if (e) v *= powers[static_cast<int>(p)][e];
        }
        sum += v;
    }
    return sum;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !(a.ctx_ == b.ctx_) && !a.is_constant()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff))
            return false;
    }
    return true;
}

namespace {

std::string monomial_string(Monomial m) {
    std::string s;
    for (auto p : kAllParams) {
        unsigned e = m.exponent(p);
        if (!e) continue;
        if (!s.empty()) s += "*";
        s += param_name(p);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.coeff.sign() < 0;
        Rational mag = t.coeff.abs();
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            s += mag.to_string();
        } else if (mag.is_one()) {
            s += monomial_string(t.mono);
        } else {
            s += mag.to_string() + "*" + monomial_string(t.mono);
        }
    }
    return s;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw division_by_zero();
    Context ctx = unify(a.context(), b.context());
    if (a.is_zero()) return Poly(ctx);
    if (b.is_constant()) return a.scaled(Rational(1) / b.constant_term()).with_context(ctx);
    const Term& lb = b.leading();
    Rational inv = Rational(1) / lb.coeff;
    Poly r = a;
    std::vector<Term> quotient;
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!lb.mono.divides(lr.mono)) return std::nullopt;
        Monomial m = lr.mono / lb.mono;
        Rational c = lr.coeff * inv;
        quotient.push_back({m, c});
        r -= b.times_monomial(m, c);
    }
    return Poly::from_terms(ctx, std::move(quotient));
}

} // namespace qhurwitz
