#include "qhurwitz/scalar.hpp"

#include <cctype>

#include "qhurwitz/errors.hpp"

namespace qhurwitz {

namespace {

Poly lift(const Poly& p, Context ctx) { return p.context() == ctx ? p : p.with_context(ctx); }

Poly quotient(const Poly& a, const Poly& b) {
    if (b.is_constant()) return a.scaled(Rational(1) / b.constant_term());
    auto q = divide_exact(a, b);
    if (!q) throw error("internal: inexact polynomial division");
    return *q;
}

} // namespace

Scalar::Scalar(const Poly& p) : num_(p), den_(Poly::constant(p.context(), Rational(1))) {}

Scalar Scalar::param(Context ctx, Param p) { return Scalar(Poly::variable(ctx, p)); }

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw division_by_zero();
    Context ctx = unify(num.context(), den.context());
    Scalar s;
    if (num.is_zero()) {
        s.num_ = Poly(ctx);
        s.den_ = Poly::constant(ctx, Rational(1));
        return s;
    }
    Poly n = lift(num, ctx), d = lift(den, ctx);
    if (!d.is_constant()) {
        Poly g = gcd(n, d);
        if (!g.is_constant()) {
            n = quotient(n, g);
            d = quotient(d, g);
        }
    }
    Rational c = Rational(1) / d.trailing().coeff;
    s.num_ = n.scaled(c);
    s.den_ = d.scaled(c);
    return s;
}

Context Scalar::context() const { return unify(num_.context(), den_.context()); }

std::optional<Rational> Scalar::constant_value() const {
    if (!is_constant()) return std::nullopt;
    return num_.constant_term() / den_.constant_term();
}

std::vector<Param> Scalar::variables() const {
    std::vector<Param> out;
    for (auto p : kAllParams)
        if (num_.degree(p) > 0 || den_.degree(p) > 0) out.push_back(p);
    return out;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Context ctx = unify(context(), o.context());
    if (o.is_zero()) {
        if (!(context() == ctx)) *this = with_context(ctx);
        return *this;
    }
    if (is_zero()) return *this = o.with_context(ctx);
    if (den_ == o.den_) {
        Poly n = lift(num_, ctx) + lift(o.num_, ctx);
        if (den_.is_constant()) {
            num_ = n;
            den_ = lift(den_, ctx);
            return *this;
        }
        return *this = fraction(n, lift(den_, ctx));
    }
    if (den_.is_constant() || o.den_.is_constant()) {
        // One denominator is 1, so the sum is automatically reduced.
        Poly n = lift(num_, ctx) * lift(o.den_, ctx) + lift(o.num_, ctx) * lift(den_, ctx);
        Poly d = lift(den_, ctx) * lift(o.den_, ctx);
        Rational c = Rational(1) / d.trailing().coeff;
        num_ = n.scaled(c);
        den_ = d.scaled(c);
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    if (g.is_constant()) {
        Poly n = lift(num_, ctx) * lift(o.den_, ctx) + lift(o.num_, ctx) * lift(den_, ctx);
        Poly d = lift(den_, ctx) * lift(o.den_, ctx);
        if (n.is_zero()) return *this = Scalar(Poly(ctx));
        Rational c = Rational(1) / d.trailing().coeff;
        num_ = n.scaled(c);
        den_ = d.scaled(c);
        return *this;
    }
    Poly ad = quotient(den_, g), bd = quotient(o.den_, g);
    Poly t = lift(num_, ctx) * lift(bd, ctx) + lift(o.num_, ctx) * lift(ad, ctx);
    if (t.is_zero()) return *this = Scalar(Poly(ctx));
    Poly g2 = gcd(t, g);
    Poly n = quotient(t, g2);
    Poly d = lift(ad, ctx) * lift(quotient(o.den_, g2), ctx);
    Rational c = Rational(1) / d.trailing().coeff;
    num_ = n.scaled(c).with_context(ctx);
    den_ = d.scaled(c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    Context ctx = unify(context(), o.context());
    if (is_zero() || o.is_zero()) return *this = Scalar(Poly(ctx));
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = lift(num_, ctx) * lift(o.num_, ctx);
        den_ = Poly::constant(ctx, Rational(1));
        return *this;
    }
    Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    Poly n = lift(quotient(num_, g1), ctx) * lift(quotient(o.num_, g2), ctx);
    Poly d = lift(quotient(den_, g2), ctx) * lift(quotient(o.den_, g1), ctx);
    Rational c = Rational(1) / d.trailing().coeff;
    num_ = n.scaled(c);
    den_ = d.scaled(c);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero();
    Scalar r;
    Rational c = Rational(1) / num_.trailing().coeff;
    r.num_ = den_.scaled(c);
    r.den_ = num_.scaled(c);
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

Rational Scalar::eval(const Assignment& a) const {
    Rational d = den_.eval(a);
    if (d.is_zero()) throw evaluation_pole("denominator vanishes at evaluation point");
    return num_.eval(a) / d;
}

namespace {

Scalar substitute_poly(const Poly& p, const std::map<Param, Scalar>& values, Context target) {
    std::map<Param, std::vector<Scalar>> powers;
    for (auto v : p.variables()) {
        auto it = values.find(v);
        auto& pw = powers[v];
        Scalar base = it != values.end() ? it->second : Scalar::param(target, v);
        pw.push_back(Scalar(1));
        for (unsigned k = 1; k <= p.degree(v); ++k) pw.push_back(pw.back() * base);
    }
    Scalar sum = Scalar(Poly(target));
    for (const auto& t : p.terms()) {
        Scalar term(t.coeff);
        for (auto& [v, pw] : powers) {
            unsigned e = t.mono.exponent(v);
            if (e) term *= pw[e];
        }
        sum += term;
    }
    return sum;
}

} // namespace

Scalar Scalar::substitute(const std::map<Param, Scalar>& values, Context target) const {
    Scalar d = substitute_poly(den_, values, target);
    if (d.is_zero()) throw evaluation_pole("denominator vanishes under substitution");
    return substitute_poly(num_, values, target) / d;
}

Scalar Scalar::with_context(Context ctx) const {
    Scalar r;
    r.num_ = num_.with_context(ctx);
    r.den_ = den_.with_context(ctx);
    return r;
}

std::vector<Scalar> Scalar::coefficients_in(Param p) const {
    if (den_.degree(p) > 0)
        throw error(std::string("denominator depends on ") + std::string(param_name(p)));
    std::vector<Scalar> out;
    Scalar inv_den = Scalar::fraction(Poly::constant(context(), Rational(1)), den_);
    for (unsigned k = 0; k <= num_.degree(p); ++k) out.push_back(Scalar(num_.coefficient(p, k)) * inv_den);
    return out;
}

// ---------------------------------------------------------------------------

std::string Scalar::to_string() const {
    mpz_class l = 1;
    for (const auto* poly : {&num_, &den_})
        for (const auto& t : poly->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.raw().get_den_mpz_t());
    mpz_class g = 0;
    for (const auto* poly : {&num_, &den_})
        for (const auto& t : poly->terms()) {
            mpz_class c = l / t.coeff.raw().get_den() * t.coeff.raw().get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
    Rational factor = Rational(l, g);
    Poly n = num_.scaled(factor), d = den_.scaled(factor);
    std::string ns = n.to_string();
    if (d.is_constant() && d.constant_term().is_one()) return ns;
    if (n.size() > 1) ns = "(" + ns + ")";
    std::string ds = d.to_string();
    if (!d.is_constant()) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::optional<Context> ctx) : s_(text), ctx_(ctx) {
        if (!ctx_) ctx_ = scan_context();
    }

    Scalar run() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v.with_context(*ctx_);
    }

private:
    Context scan_context() {
        Context ctx;
        std::vector<Param> found;
        for (std::size_t i = 0; i < s_.size();) {
            if (std::isalpha(static_cast<unsigned char>(s_[i])) || static_cast<unsigned char>(s_[i]) >= 0x80) {
                std::size_t j = i;
                while (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) ||
                                         static_cast<unsigned char>(s_[j]) >= 0x80))
                    ++j;
                if (auto p = param_from_name(s_.substr(i, j - i))) found.push_back(*p);
                i = j;
            } else {
                ++i;
            }
        }
        for (auto p : found) ctx = ctx.with(p);
        return ctx;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        unsigned char c = static_cast<unsigned char>(s_[pos_]);
        return std::isdigit(c) || std::isalpha(c) || c >= 0x80 || c == '(';
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v += term();
            } else if (peek('-')) {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                v *= unary();
            } else if (peek('/')) {
                ++pos_;
                Scalar d = unary();
                if (d.is_zero()) throw division_by_zero();
                v /= d;
            } else if (starts_factor()) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            bool neg = false;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                neg = s_[pos_] == '-';
                ++pos_;
            }
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            long e = std::stol(std::string(s_.substr(start, pos_ - start)));
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        unsigned char c = static_cast<unsigned char>(s_[pos_]);
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '.') fail("decimals are not accepted");
            return Scalar(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(c) || c >= 0x80) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                                        static_cast<unsigned char>(s_[pos_]) >= 0x80))
                ++pos_;
            auto name = s_.substr(start, pos_ - start);
            auto p = param_from_name(name);
            if (!p) fail("unknown parameter '" + std::string(name) + "'");
            if (!ctx_->contains(*p)) fail("parameter '" + std::string(name) + "' outside context");
            return Scalar::param(*ctx_, *p);
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::optional<Context> ctx_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text, std::nullopt).run(); }

Scalar Scalar::parse(std::string_view text, Context ctx) { return Parser(text, ctx).run(); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, char op) {
    switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
    }
    throw error(std::string("unknown operator '") + op + "'");
}

Rational scalar_eval(const Scalar& a, const Assignment& at) { return a.eval(at); }

} // namespace qhurwitz
