#include "qhurwitz/rational.hpp"

#include <cctype>

#include "qhurwitz/errors.hpp"

namespace qhurwitz {

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw parse_error("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw parse_error("malformed rational: '" + std::string(whole) + "'");
    }
    mpz_class v(std::string(s.substr(i)), 10);
    return neg ? mpz_class(-v) : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw division_by_zero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw division_by_zero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    auto num = parse_integer(trim(s.substr(0, slash)), text);
    auto den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw division_by_zero();
    return Rational(num, den);
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw division_by_zero();
        return Rational(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

} // namespace qhurwitz
