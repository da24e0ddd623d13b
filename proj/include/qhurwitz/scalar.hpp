#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhurwitz/poly.hpp"
#include "qhurwitz/rational.hpp"

namespace qhurwitz {

/// Element of Q(params): a reduced fraction num/den whose denominator has
/// lowest graded-lex coefficient 1. Equal values have identical representation.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : num_(Poly::constant(Context(), Rational(v))), den_(one()) {}
    Scalar(long v) : num_(Poly::constant(Context(), Rational(v))), den_(one()) {}
    Scalar(const Rational& v) : num_(Poly::constant(Context(), v)), den_(one()) {}
    explicit Scalar(const Poly& p);

    static Scalar param(Context ctx, Param p);
    /// Reduces and normalizes num/den. Throws division_by_zero when den is zero.
    static Scalar fraction(const Poly& num, const Poly& den);

    Context context() const;
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_term().is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// The rational value of a parameter-free scalar.
    std::optional<Rational> constant_value() const;
    std::vector<Param> variables() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inverse() const;
    Scalar pow(long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Exact value at a point. Throws evaluation_pole when the denominator vanishes.
    Rational eval(const Assignment& a) const;

    /// Replaces the listed parameters by scalars; the result lives in target.
    Scalar substitute(const std::map<Param, Scalar>& values, Context target) const;
    Scalar with_context(Context ctx) const;

    /// Coefficients of p^0, p^1, ... when the denominator is free of p.
    std::vector<Scalar> coefficients_in(Param p) const;

    /// Canonical text: integer coefficients, ascending graded-lex terms,
    /// e.g. "(1 - t)/(1 - q)", "1/2", "q/(1 - q)".
    std::string to_string() const;
    /// Parses +, -, *, /, ^, parentheses and implicit products. The context
    /// defaults to the parameters that occur in the text.
    static Scalar parse(std::string_view text);
    static Scalar parse(std::string_view text, Context ctx);

private:
    static Poly one() { return Poly::constant(Context(), Rational(1)); }
    Poly num_;
    Poly den_ = one();
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, char op);
Rational scalar_eval(const Scalar& a, const Assignment& at);

} // namespace qhurwitz
