#include "qhurwitz/zseries.hpp"

#include "qhurwitz/errors.hpp"

namespace qhurwitz {

namespace {

void check_order(const ZSeries& a, const ZSeries& b) {
    if (a.order() != b.order())
        throw order_mismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()));
}

} // namespace

ZSeries ZSeries::constant(const Scalar& c, unsigned order) {
    ZSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

ZSeries ZSeries::from_coeffs(std::vector<Scalar> coeffs, unsigned order) {
    if (coeffs.size() > order + 1) throw order_mismatch("more coefficients than the declared order allows");
    ZSeries s(order);
    for (std::size_t k = 0; k < coeffs.size(); ++k) s.coeffs_[k] = std::move(coeffs[k]);
    return s;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
    check_order(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
    check_order(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    check_order(a, b);
    unsigned d = a.order();
    ZSeries r(d);
    for (unsigned i = 0; i <= d; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= d; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

ZSeries ZSeries::scaled(const Scalar& c) const {
    ZSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

ZSeries ZSeries::scale_argument(const Scalar& factor) const {
    ZSeries r = *this;
    Scalar f = 1;
    for (std::size_t k = 1; k < r.coeffs_.size(); ++k) {
        f *= factor;
        r.coeffs_[k] *= f;
    }
    return r;
}

ZSeries ZSeries::inverse() const {
    if (coeffs_[0].is_zero()) throw division_by_zero();
    unsigned d = order();
    ZSeries r(d);
    Scalar inv0 = coeffs_[0].inverse();
    r.coeffs_[0] = inv0;
    for (unsigned k = 1; k <= d; ++k) {
        Scalar acc = 0;
        for (unsigned i = 1; i <= k; ++i) {
            if (coeffs_[i].is_zero()) continue;
            acc += coeffs_[i] * r.coeffs_[k - i];
        }
        r.coeffs_[k] = -acc * inv0;
    }
    return r;
}

ZSeries mul_many(const std::vector<ZSeries>& factors, unsigned order) {
    ZSeries r = ZSeries::constant(Scalar(1), order);
    for (const auto& f : factors) r = r * f;
    return r;
}

} // namespace qhurwitz
