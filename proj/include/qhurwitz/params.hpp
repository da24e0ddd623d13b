#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "qhurwitz/scalar.hpp"

namespace qhurwitz {

/// Values of q, t, alpha, u for a computation: each is either a symbol of the
/// context, a rational number or an expression in the symbols (e.g. t := q).
class ParamSpace {
public:
    /// Every parameter of ctx is bound to itself; the others are unbound.
    explicit ParamSpace(Context ctx = Context{Param::q, Param::t});

    ParamSpace& bind(Param p, const Scalar& value);
    ParamSpace bound(Param p, const Scalar& value) const { return ParamSpace(*this).bind(p, value); }

    Context context() const { return ctx_; }
    bool is_bound(Param p) const { return values_[static_cast<int>(p)].has_value(); }
    /// Throws error for an unbound parameter.
    const Scalar& value(Param p) const;
    const Scalar& q() const { return value(Param::q); }
    const Scalar& t() const { return value(Param::t); }
    const Scalar& alpha() const { return value(Param::alpha); }
    const Scalar& u() const { return value(Param::u); }

    /// True when every bound value is a constant.
    bool is_numeric() const;
    /// Identifies the bindings; equal keys mean equal parameter spaces.
    std::string key() const;

    /// Constant bindings drawn for the given parameters, denominators at most 10^4.
    static ParamSpace random_point(Context params, std::mt19937_64& rng);

private:
    Context ctx_;
    std::array<std::optional<Scalar>, kParamCount> values_;
};

Rational random_rational(std::mt19937_64& rng, long max_den = 10000);

} // namespace qhurwitz
