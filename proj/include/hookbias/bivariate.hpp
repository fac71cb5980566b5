#pragma once

// Series in (z, q) truncated to z-degree M and q-order N.

#include <span>
#include <stdexcept>
#include <vector>

#include "qseries.hpp"

namespace hookbias {

template <CoefficientType T = Coeff>
class BivariateSeries {
public:
    BivariateSeries(int z_degree, int q_order) : z_degree_(z_degree), q_order_(q_order) {
        if (z_degree < 0 || q_order < 0) throw std::invalid_argument("bivariate truncation must be non-negative");
        coeffs_.assign(static_cast<std::size_t>(z_degree + 1) * static_cast<std::size_t>(q_order + 1), T{0});
    }

    /// The univariate series s placed at z^0.
    static BivariateSeries from_series(const TruncatedSeries<T>& s, int z_degree) {
        BivariateSeries b(z_degree, s.order());
        for (int n = 0; n <= s.order(); ++n) b.at(0, n) = s[n];
        return b;
    }

    /// value(q) + z * zcoeff(q)
    static BivariateSeries linear_in_z(const TruncatedSeries<T>& value, const TruncatedSeries<T>& zcoeff, int z_degree) {
        const int order = std::min(value.order(), zcoeff.order());
        BivariateSeries b(z_degree, order);
        for (int n = 0; n <= order; ++n) {
            b.at(0, n) = value[n];
            if (z_degree >= 1) b.at(1, n) = zcoeff[n];
        }
        return b;
    }

    int z_degree() const noexcept { return z_degree_; }
    int q_order() const noexcept { return q_order_; }

    T coeff(int m, int n) const {
        if (m < 0 || m > z_degree_ || n < 0 || n > q_order_) throw std::out_of_range("bivariate coefficient index");
        return coeffs_[index(m, n)];
    }

    /// F(1; q): sum over the z-degree.
    TruncatedSeries<T> collapse_at_z_one() const {
        TruncatedSeries<T> s(q_order_);
        for (int n = 0; n <= q_order_; ++n) {
            T acc{0};
            for (int m = 0; m <= z_degree_; ++m) acc = checked_add(acc, coeffs_[index(m, n)]);
            s.set(n, acc);
        }
        return s;
    }

    /// dF/dz at z = 1: sum over m of m * c_{m,n}.
    TruncatedSeries<T> z_derivative_at_one() const {
        TruncatedSeries<T> s(q_order_);
        for (int n = 0; n <= q_order_; ++n) {
            T acc{0};
            for (int m = 1; m <= z_degree_; ++m) acc = checked_add(acc, checked_mul(static_cast<T>(m), coeffs_[index(m, n)]));
            s.set(n, acc);
        }
        return s;
    }

    /// In-place multiplication by 1 + (z - 1) q^e.
    void mul_shifted_z_binomial(int e) {
        if (e < 1) throw std::invalid_argument("factor exponent must be positive");
        for (int n = q_order_; n >= e; --n) {
            for (int m = z_degree_; m >= 0; --m) {
                T c = checked_sub(coeffs_[index(m, n)], coeffs_[index(m, n - e)]);
                if (m >= 1) c = checked_add(c, coeffs_[index(m - 1, n - e)]);
                coeffs_[index(m, n)] = c;
            }
        }
    }

    BivariateSeries& operator+=(const BivariateSeries& rhs) {
        require_same_shape(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
        return *this;
    }

    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
        const int zd = std::min(a.z_degree_, b.z_degree_);
        const int qo = std::min(a.q_order_, b.q_order_);
        BivariateSeries out(zd, qo);
        for (int m1 = 0; m1 <= zd; ++m1) {
            for (int n1 = 0; n1 <= qo; ++n1) {
                const T x = a.coeffs_[a.index(m1, n1)];
                if (x == 0) continue;
                for (int m2 = 0; m1 + m2 <= zd; ++m2) {
                    for (int n2 = 0; n1 + n2 <= qo; ++n2) {
                        const T y = b.coeffs_[b.index(m2, n2)];
                        if (y == 0) continue;
                        auto& slot = out.coeffs_[out.index(m1 + m2, n1 + n2)];
                        slot = checked_add(slot, checked_mul(x, y));
                    }
                }
            }
        }
        return out;
    }

    /// Multiplies each z-row by a univariate series.
    friend BivariateSeries operator*(const BivariateSeries& a, const TruncatedSeries<T>& s) {
        const int qo = std::min(a.q_order_, s.order());
        BivariateSeries out(a.z_degree_, qo);
        for (int m = 0; m <= a.z_degree_; ++m) {
            for (int i = 0; i <= qo; ++i) {
                const T x = a.coeffs_[a.index(m, i)];
                if (x == 0) continue;
                for (int j = 0; i + j <= qo; ++j) {
                    if (s[j] == 0) continue;
                    auto& slot = out.coeffs_[out.index(m, i + j)];
                    slot = checked_add(slot, checked_mul(x, s[j]));
                }
            }
        }
        return out;
    }

    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
    std::size_t index(int m, int n) const {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(q_order_ + 1) + static_cast<std::size_t>(n);
    }
    T& at(int m, int n) { return coeffs_[index(m, n)]; }

    void require_same_shape(const BivariateSeries& rhs) const {
        if (rhs.z_degree_ != z_degree_ || rhs.q_order_ != q_order_) {
            throw std::invalid_argument("bivariate series shapes differ");
        }
    }

    int z_degree_;
    int q_order_;
    std::vector<T> coeffs_;
};

/// Product of bivariate factors; the empty product is 1 at the given truncation.
template <CoefficientType T>
BivariateSeries<T> bivariate_product(std::span<const BivariateSeries<T>> factors, int z_degree, int q_order) {
    auto acc = BivariateSeries<T>::from_series(TruncatedSeries<T>::one(q_order), z_degree);
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

}  // namespace hookbias
