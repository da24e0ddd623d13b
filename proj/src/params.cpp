#include "qhurwitz/params.hpp"

#include "qhurwitz/errors.hpp"

namespace qhurwitz {

ParamSpace::ParamSpace(Context ctx) : ctx_(ctx) {
    for (auto p : ctx.params()) values_[static_cast<int>(p)] = Scalar::param(ctx, p);
}

ParamSpace& ParamSpace::bind(Param p, const Scalar& value) {
    unify(ctx_, value.context());
    values_[static_cast<int>(p)] = value.context().empty() ? value : value.with_context(ctx_);
    return *this;
}

const Scalar& ParamSpace::value(Param p) const {
    const auto& v = values_[static_cast<int>(p)];
    if (!v) throw error(std::string("parameter ") + std::string(param_name(p)) + " is not bound");
    return *v;
}

bool ParamSpace::is_numeric() const {
    for (const auto& v : values_)
        if (v && !v->is_constant()) return false;
    return true;
}

std::string ParamSpace::key() const {
    std::string k = ctx_.to_string();
    for (auto p : kAllParams) {
        const auto& v = values_[static_cast<int>(p)];
        if (!v) continue;
        k += ";";
        k += param_name(p);
        k += "=" + v->to_string();
    }
    return k;
}

Rational random_rational(std::mt19937_64& rng, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den);
    std::uniform_int_distribution<long> num(-max_den, max_den);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (!r.is_zero() && !r.abs().is_one()) return r;
    }
}

ParamSpace ParamSpace::random_point(Context params, std::mt19937_64& rng) {
    ParamSpace ps{Context()};
    for (auto p : params.params()) ps.values_[static_cast<int>(p)] = Scalar(random_rational(rng));
    return ps;
}

} // namespace qhurwitz
