#pragma once

#include <vector>

#include "qhurwitz/scalar.hpp"

namespace qhurwitz {

/// Power series in z truncated at an explicit order D (coefficients of z^0..z^D).
class ZSeries {
public:
    explicit ZSeries(unsigned order = 0) : coeffs_(order + 1, Scalar(0)) {}
    static ZSeries constant(const Scalar& c, unsigned order);
    /// Coefficients beyond the list are zero; the list may not exceed order + 1 entries.
    static ZSeries from_coeffs(std::vector<Scalar> coeffs, unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Scalar& operator[](unsigned k) const { return coeffs_.at(k); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    ZSeries& operator+=(const ZSeries& o);
    ZSeries& operator-=(const ZSeries& o);
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
    friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
    /// Cauchy product.
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
    ZSeries scaled(const Scalar& c) const;
    /// z -> factor * z.
    ZSeries scale_argument(const Scalar& factor) const;
    /// Multiplicative inverse; requires an invertible constant term.
    ZSeries inverse() const;

    friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Scalar> coeffs_;
};

ZSeries mul_many(const std::vector<ZSeries>& factors, unsigned order);

} // namespace qhurwitz
