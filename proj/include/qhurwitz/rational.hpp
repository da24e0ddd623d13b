#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qhurwitz {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& v) : v_(v) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p/q" or an integer string. Decimals are rejected.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational pow(long e) const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

Rational factorial(long n);

} // namespace qhurwitz
