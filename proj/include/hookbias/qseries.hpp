#pragma once

// Truncated formal power series in q with exact integer coefficients.
//
// A TruncatedSeries of order N holds c_0..c_N and represents the series
// modulo q^(N+1). Binary operations on series of different orders truncate
// to the smaller order. Every coefficient operation is overflow-checked.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coeff.hpp"

namespace hookbias {

template <CoefficientType T = Coeff>
class TruncatedSeries {
public:
    using value_type = T;

    explicit TruncatedSeries(int order) {
        if (order < 0) throw std::invalid_argument("series order must be non-negative");
        coeffs_.assign(static_cast<std::size_t>(order) + 1, T{0});
    }

    /// Series whose order is coeffs.size() - 1.
    static TruncatedSeries from_coeffs(std::vector<T> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
        TruncatedSeries s(0);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    /// Polynomial given as (exponent, coefficient) pairs; terms beyond the order are dropped.
    static TruncatedSeries polynomial(std::initializer_list<std::pair<int, T>> terms, int order) {
        TruncatedSeries s(order);
        for (auto [e, c] : terms) {
            if (e < 0) throw std::invalid_argument("negative exponent");
            if (e <= order) s.coeffs_[static_cast<std::size_t>(e)] = checked_add(s.coeffs_[static_cast<std::size_t>(e)], c);
        }
        return s;
    }

    static TruncatedSeries one(int order) { return monomial(0, T{1}, order); }

    static TruncatedSeries monomial(int exponent, T c, int order) {
        TruncatedSeries s(order);
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
        return s;
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const T> coeffs() const noexcept { return coeffs_; }

    T operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    T at(int n) const {
        if (n < 0 || n > order()) {
            throw std::out_of_range("coefficient index " + std::to_string(n) + " outside 0.." +
                                    std::to_string(order()));
        }
        return coeffs_[static_cast<std::size_t>(n)];
    }
    void set(int n, T value) { coeffs_.at(static_cast<std::size_t>(n)) = value; }

    TruncatedSeries truncated(int order) const {
        if (order > this->order()) throw std::invalid_argument("cannot raise the truncation order");
        return from_coeffs({coeffs_.begin(), coeffs_.begin() + order + 1});
    }

    /// Multiplies by q^shift.
    TruncatedSeries shifted(int shift) const {
        if (shift < 0) throw std::invalid_argument("negative shift");
        TruncatedSeries out(order());
        for (int n = order(); n >= shift; --n) out.coeffs_[idx(n)] = coeffs_[idx(n - shift)];
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
        shrink_to(rhs.order());
        for (int n = 0; n <= order(); ++n) coeffs_[idx(n)] = checked_add(coeffs_[idx(n)], rhs[n]);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
        shrink_to(rhs.order());
        for (int n = 0; n <= order(); ++n) coeffs_[idx(n)] = checked_sub(coeffs_[idx(n)], rhs[n]);
        return *this;
    }

    TruncatedSeries& operator*=(T scalar) {
        for (auto& c : coeffs_) c = checked_mul(c, scalar);
        return *this;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& rhs) {
        *this = *this * rhs;
        return *this;
    }

    /// In-place multiplication by (1 + sign * q^e).
    void mul_binomial(int e, int sign) {
        if (e < 1) throw std::invalid_argument("binomial factor exponent must be positive");
        for (int n = order(); n >= e; --n) {
            const T term = coeffs_[idx(n - e)];
            coeffs_[idx(n)] = sign > 0 ? checked_add(coeffs_[idx(n)], term) : checked_sub(coeffs_[idx(n)], term);
        }
    }

    /// In-place multiplication by 1/(1 - q^m) = 1 + q^m + q^2m + ...
    void div_one_minus(int m) {
        if (m < 1) throw std::invalid_argument("geometric step must be positive");
        for (int n = m; n <= order(); ++n) coeffs_[idx(n)] = checked_add(coeffs_[idx(n)], coeffs_[idx(n - m)]);
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a) { return a *= T{-1}; }
    friend TruncatedSeries operator*(TruncatedSeries a, T scalar) { return a *= scalar; }
    friend TruncatedSeries operator*(T scalar, TruncatedSeries a) { return a *= scalar; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int order = std::min(a.order(), b.order());
        // Iterate the sparser operand in the outer loop.
        const bool a_sparser = a.nonzero_count(order) <= b.nonzero_count(order);
        const TruncatedSeries& outer = a_sparser ? a : b;
        const TruncatedSeries& inner = a_sparser ? b : a;
        TruncatedSeries out(order);
        for (int i = 0; i <= order; ++i) {
            const T x = outer[i];
            if (x == 0) continue;
            for (int j = 0; i + j <= order; ++j) {
                const T y = inner[j];
                if (y == 0) continue;
                out.coeffs_[idx(i + j)] = checked_add(out.coeffs_[idx(i + j)], checked_mul(x, y));
            }
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static std::size_t idx(int n) { return static_cast<std::size_t>(n); }

    void shrink_to(int order) {
        if (order < this->order()) coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    int nonzero_count(int upto) const {
        return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.begin() + upto + 1, [](T c) { return c != 0; }));
    }

    std::vector<T> coeffs_;
};

/// q^a / (1 - q^m) truncated at order N.
template <CoefficientType T = Coeff>
TruncatedSeries<T> geometric(int a, int m, int order) {
    if (a < 0) throw std::invalid_argument("geometric: leading exponent must be non-negative");
    if (m < 1) throw std::invalid_argument("geometric: step must be positive");
    TruncatedSeries<T> s(order);
    for (int e = a; e <= order; e += m) s.set(e, T{1});
    return s;
}

/// (sign * q^a; q^step)_inf = prod_{j>=0} (1 - sign * q^(a + j*step)).
/// sign = +1 gives (q^a; q^step)_inf, sign = -1 gives (-q^a; q^step)_inf.
/// Factors whose exponent exceeds the order are 1 and are skipped.
template <CoefficientType T = Coeff>
TruncatedSeries<T> pochhammer(int a, int step, int sign, int order) {
    if (a < 1 || step < 1) throw std::invalid_argument("pochhammer: exponents must be positive");
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    auto s = TruncatedSeries<T>::one(order);
    for (int e = a; e <= order; e += step) s.mul_binomial(e, -sign);
    return s;
}

/// (q^a; q^step)_inf
template <CoefficientType T = Coeff>
TruncatedSeries<T> q_pochhammer(int a, int step, int order) { return pochhammer<T>(a, step, 1, order); }

/// (-q^a; q^step)_inf
template <CoefficientType T = Coeff>
TruncatedSeries<T> neg_q_pochhammer(int a, int step, int order) { return pochhammer<T>(a, step, -1, order); }

/// Multiplicative inverse of a series whose constant term is +1 or -1.
template <CoefficientType T>
TruncatedSeries<T> invert_unit(const TruncatedSeries<T>& s) {
    const T c0 = s[0];
    if (c0 != 1 && c0 != -1) throw std::domain_error("invert_unit: constant term must be +1 or -1");
    TruncatedSeries<T> r(s.order());
    r.set(0, c0);
    // c0 * sum_{k=0}^{n} s_k r_{n-k} = 0 for n >= 1, and c0^{-1} = c0.
    for (int n = 1; n <= s.order(); ++n) {
        T acc{0};
        for (int k = 1; k <= n; ++k) {
            if (s[k] != 0) acc = checked_add(acc, checked_mul(s[k], r[n - k]));
        }
        r.set(n, checked_mul(acc, static_cast<T>(-c0)));
    }
    return r;
}

}  // namespace hookbias
