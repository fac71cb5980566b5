#pragma once

// First-order jets of series-valued functions of z at z = 1.
//
// A DualSeries (F, F') stands for F(1; q) + eps * dF/dz(1; q) with eps^2 = 0.
// Multiplying jets applies the product rule exactly, so the z-derivative of
// an infinite product is accumulated factor by factor without any division.

#include <span>
#include <stdexcept>

#include "qseries.hpp"

namespace hookbias {

template <CoefficientType T = Coeff>
struct DualSeries {
    TruncatedSeries<T> value;
    TruncatedSeries<T> deriv;

    static DualSeries constant(const TruncatedSeries<T>& s) { return {s, TruncatedSeries<T>(s.order())}; }
    static DualSeries one(int order) { return constant(TruncatedSeries<T>::one(order)); }

    /// Jet of value(q) + z * zcoeff(q).
    static DualSeries linear(const TruncatedSeries<T>& value, const TruncatedSeries<T>& zcoeff) {
        return {value + zcoeff, zcoeff};
    }

    /// Jet of sum_j coeffs[j](q) z^j.
    static DualSeries from_z_polynomial(std::span<const TruncatedSeries<T>> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("empty z-polynomial");
        DualSeries out = constant(coeffs[0]);
        for (std::size_t j = 1; j < coeffs.size(); ++j) {
            out.value += coeffs[j];
            out.deriv += coeffs[j] * static_cast<T>(j);
        }
        return out;
    }

    DualSeries& operator+=(const DualSeries& rhs) {
        value += rhs.value;
        deriv += rhs.deriv;
        return *this;
    }

    friend DualSeries operator+(DualSeries a, const DualSeries& b) { return a += b; }

    friend DualSeries operator*(const DualSeries& a, const DualSeries& b) {
        return {a.value * b.value, a.value * b.deriv + a.deriv * b.value};
    }

    int order() const { return std::min(value.order(), deriv.order()); }
};

/// Product of jets. Each factor must evaluate at z = 1 to a series with
/// constant term 1 (a genuine factor of an infinite product).
template <CoefficientType T>
DualSeries<T> dual_product(std::span<const DualSeries<T>> factors, int order) {
    auto acc = DualSeries<T>::one(order);
    for (const auto& f : factors) {
        if (f.value[0] != 1) throw std::domain_error("dual_product: factor at z = 1 must have constant term 1");
        acc = acc * f;
    }
    return acc;
}

}  // namespace hookbias
