#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhurwitz/rational.hpp"

namespace qhurwitz {

/// The deformation parameters a computation may carry symbolically.
enum class Param : std::uint8_t { q = 0, t = 1, alpha = 2, u = 3 };
inline constexpr int kParamCount = 4;
inline constexpr std::array<Param, kParamCount> kAllParams{Param::q, Param::t, Param::alpha,
                                                           Param::u};

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

/// Ordered parameter set of a computation. The order is always q, t, alpha, u
/// restricted to the members present.
class Context {
public:
    constexpr Context() = default;
    Context(std::initializer_list<Param> params);
    static Context from_mask(std::uint8_t mask) {
        Context c;
        c.mask_ = mask & 0x0f;
        return c;
    }
    Context with(Param p) const { return from_mask(mask_ | static_cast<std::uint8_t>(1u << static_cast<int>(p))); }

    bool contains(Param p) const { return (mask_ >> static_cast<int>(p)) & 1u; }
    bool empty() const { return mask_ == 0; }
    std::uint8_t mask() const { return mask_; }
    std::vector<Param> params() const;
    std::string to_string() const;

    friend bool operator==(Context a, Context b) { return a.mask_ == b.mask_; }

private:
    std::uint8_t mask_ = 0;
};

/// Combined context of two operands. A parameter-free operand is a plain
/// rational constant and adopts the other context; any other difference is
/// an error.
Context unify(Context a, Context b);

/// Exponent vector packed as four 16-bit fields; q occupies the most
/// significant field so integer comparison is lexicographic with q > t > alpha > u.
class Monomial {
public:
    constexpr Monomial() = default;
    static Monomial of(Param p, unsigned e = 1);
    static Monomial from_bits(std::uint64_t bits) {
        Monomial m;
        m.bits_ = bits;
        return m;
    }

    unsigned exponent(Param p) const {
        return static_cast<unsigned>((bits_ >> shift(p)) & 0xffffu);
    }
    unsigned degree() const;
    bool is_one() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    bool divides(Monomial o) const;
    Monomial with_exponent(Param p, unsigned e) const;

    friend Monomial operator*(Monomial a, Monomial b);
    friend Monomial operator/(Monomial a, Monomial b);
    friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

    /// Graded lexicographic order.
    friend std::strong_ordering operator<=>(Monomial a, Monomial b);

    static Monomial gcd(Monomial a, Monomial b);

private:
    static int shift(Param p) { return 48 - 16 * static_cast<int>(p); }
    std::uint64_t bits_ = 0;
};

struct Term {
    Monomial mono;
    Rational coeff;
};

using Assignment = std::map<Param, Rational>;

/// Sparse multivariate polynomial with rational coefficients. Terms are kept in
/// ascending graded-lexicographic order with no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(Context ctx) : ctx_(ctx) {}

    static Poly constant(Context ctx, const Rational& c);
    static Poly variable(Context ctx, Param p);
    /// Sorts, merges equal monomials and drops zeros.
    static Poly from_terms(Context ctx, std::vector<Term> terms);

    Context context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const;
    /// Highest term in graded-lex order. Requires a nonzero polynomial.
    const Term& leading() const { return terms_.back(); }
    /// Lowest term in graded-lex order. Requires a nonzero polynomial.
    const Term& trailing() const { return terms_.front(); }

    unsigned degree(Param p) const;
    unsigned total_degree() const;
    /// Parameters with a positive exponent somewhere in the polynomial.
    std::vector<Param> variables() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly times_monomial(Monomial m, const Rational& c) const;
    Poly pow(unsigned e) const;

    /// Coefficient of p^k, as a polynomial free of p.
    Poly coefficient(Param p, unsigned k) const;
    /// Replace the context tag. Every variable used must belong to ctx.
    Poly with_context(Context ctx) const;

    Rational eval(const Assignment& a) const;

    friend bool operator==(const Poly& a, const Poly& b);

    /// Terms joined in ascending graded-lex order, e.g. "1 - 2*q + q^2*t".
    std::string to_string() const;

private:
    Context ctx_;
    std::vector<Term> terms_;
};

/// Exact quotient a/b when b divides a over Q[params], otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor normalized so its lowest graded-lex term has
/// coefficient 1. gcd(0, 0) = 0. Uses a heuristic evaluation/interpolation
/// scheme and falls back to gcd_subresultant when it does not converge.
Poly gcd(const Poly& a, const Poly& b);

/// Reference algorithm: recursive content/primitive-part decomposition with a
/// subresultant remainder sequence in the main variable. Same normalization as gcd.
Poly gcd_subresultant(const Poly& a, const Poly& b);

} // namespace qhurwitz
