#pragma once

// Generating functions for hook counts, realized as truncated series.
//
// Every infinite product is a truncated q-Pochhammer product and every
// rational term 1/(1 - q^m) is a geometric expansion. Besides the closed
// forms, several functions are also available through an independent
// derivation route (a jet product over the defining infinite product); the
// two routes are compared in the test suite.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bivariate.hpp"
#include "dual_series.hpp"
#include "qseries.hpp"

namespace hookbias {

enum class GfForm { Original, Rewritten };

namespace detail {

inline void require_positive_k(int k) {
    if (k < 1) throw std::invalid_argument("hook length k must be positive");
}

inline void require_t(int t, int min_t = 2) {
    if (t < min_t) throw std::invalid_argument("t must be at least " + std::to_string(min_t));
}

// (q^t; q^t)_inf / (q; q)_inf, the generating function of t-regular partitions.
template <CoefficientType T>
TruncatedSeries<T> regular_partition_gf(int t, int order) {
    return q_pochhammer<T>(t, t, order) * invert_unit(q_pochhammer<T>(1, 1, order));
}

// numerator(q) / (1 - q^m)
template <CoefficientType T>
TruncatedSeries<T> over_one_minus(TruncatedSeries<T> numerator, int m) {
    numerator.div_one_minus(m);
    return numerator;
}

}  // namespace detail

/// sum p(n) q^n = 1/(q;q)_inf
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_p(int order) {
    return invert_unit(q_pochhammer<T>(1, 1, order));
}

/// sum a(n) q^n = 1/(q^2;q)_inf, partitions with smallest part at least 2.
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_smallest_part_at_least_two(int order) {
    return invert_unit(q_pochhammer<T>(2, 1, order));
}

/// sum p_(k)(n) q^n = 1/(q;q)_inf * k q^k / (1 - q^k)
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_p_k(int k, int order) {
    detail::require_positive_k(k);
    return gf_p<T>(order) * (geometric<T>(k, k, order) * static_cast<T>(k));
}

/// sum p_(k)(m,n) z^m q^n = (-(z-1)q^k; q^k)_inf^k / (q;q)_inf
///
/// A partition of n has at most n/k hooks of length k, so z_degree = N/k
/// loses nothing; a smaller z_degree truncates in z.
template <CoefficientType T = Coeff>
BivariateSeries<T> gf_p_k_bivariate(int k, int order, std::optional<int> z_degree = std::nullopt) {
    detail::require_positive_k(k);
    const int m = z_degree.value_or(order / k);
    auto f = BivariateSeries<T>::from_series(TruncatedSeries<T>::one(order), m);
    for (int e = k; e <= order; e += k) {
        for (int rep = 0; rep < k; ++rep) f.mul_shifted_z_binomial(e);
    }
    return f * gf_p<T>(order);
}

/// sum b_{t,1}(n) q^n = (q^t;q^t)/(q;q) * (q/(1-q) - q^t/(1-q^t))
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_b_t_1(int t, int order) {
    detail::require_t(t);
    return detail::regular_partition_gf<T>(t, order) * (geometric<T>(1, 1, order) - geometric<T>(t, t, order));
}

/// b_{t,1} through the jet of prod_{t does not divide n} (1 + z q^n / (1 - q^n)):
/// one-hooks of a partition are its distinct part sizes.
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_b_t_1_product(int t, int order) {
    detail::require_t(t);
    std::vector<DualSeries<T>> factors;
    for (int n = 1; n <= order; ++n) {
        if (n % t == 0) continue;
        factors.push_back(DualSeries<T>::linear(TruncatedSeries<T>::one(order), geometric<T>(n, n, order)));
    }
    return dual_product<T>(factors, order).deriv;
}

/// sum b_{2,2}(n) q^n.
///   Original:  1/(q;q^2)_inf * (q^2 + sum_{n>=2} (q^(2n-1) + q^(2(2n-1))))
///   Rewritten: (-q^3;q)_inf * (q^2 + 2q^3 + q^4 + q^5 + q^6) / (1 - q^2)
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_b_2_2(int order, GfForm form = GfForm::Original) {
    if (form == GfForm::Original) {
        auto inner = TruncatedSeries<T>::monomial(2, T{1}, order);
        for (int n = 2; 2 * n - 1 <= order; ++n) {
            inner += TruncatedSeries<T>::monomial(2 * n - 1, T{1}, order);
            inner += TruncatedSeries<T>::monomial(2 * (2 * n - 1), T{1}, order);
        }
        return invert_unit(q_pochhammer<T>(1, 2, order)) * inner;
    }
    auto num = TruncatedSeries<T>::polynomial({{2, 1}, {3, 2}, {4, 1}, {5, 1}, {6, 1}}, order);
    return neg_q_pochhammer<T>(3, 1, order) * detail::over_one_minus(std::move(num), 2);
}

/// sum b_{2,3}(n) q^n.
///   Original:  (-q^3;q) q^3(1+q^3)/(1-q^2) + (-q;q) (q^6/(1-q^4) + q^3/(1-q^6))
///   Rewritten: (-q^3;q) (q^3 + 2q^6 + q^7)/(1-q^2) + (-q;q) q^3/(1-q^6)
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_b_2_3(int order, GfForm form = GfForm::Original) {
    const auto tail = neg_q_pochhammer<T>(3, 1, order);
    const auto distinct = neg_q_pochhammer<T>(1, 1, order);
    if (form == GfForm::Original) {
        auto first = detail::over_one_minus(TruncatedSeries<T>::polynomial({{3, 1}, {6, 1}}, order), 2);
        return tail * first + distinct * (geometric<T>(6, 4, order) + geometric<T>(3, 6, order));
    }
    auto first = detail::over_one_minus(TruncatedSeries<T>::polynomial({{3, 1}, {6, 2}, {7, 1}}, order), 2);
    return tail * first + distinct * geometric<T>(3, 6, order);
}

/// sum b_{3,2}(n) q^n = (q^3;q^3)/(q;q) (q^2/(1-q) + q^2/(1-q^2) - 2q^3/(1-q^3))
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_b_3_2(int order) {
    auto bracket = geometric<T>(2, 1, order) + geometric<T>(2, 2, order) - geometric<T>(3, 3, order) * T{2};
    return detail::regular_partition_gf<T>(3, order) * bracket;
}

namespace detail {

// Common numerator for t in {3, 4}: q^2 + sum_{n>=2, t does not divide n} (q^n + q^2n),
// the derivative of (1 + q + z q^2/(1-q)) prod_{n>=2} (1 + z q^n + z^2 q^2n/(1-q^n))
// divided by its value.
template <CoefficientType T>
TruncatedSeries<T> repeated_or_gapped_numerator(int t, int order) {
    auto s = TruncatedSeries<T>::monomial(2, T{1}, order);
    for (int n = 2; n <= order; ++n) {
        if (n % t == 0) continue;
        s += TruncatedSeries<T>::monomial(n, T{1}, order);
        if (2 * n <= order) s += TruncatedSeries<T>::monomial(2 * n, T{1}, order);
    }
    return s;
}

// Jet factors of prod over admissible parts of the weight counting
// "part occurs at least twice" once and "part s >= 2 present" once.
template <CoefficientType T>
void append_repeated_or_gapped_factors(int t, int order, std::vector<DualSeries<T>>& factors) {
    const auto one = TruncatedSeries<T>::one(order);
    std::vector<TruncatedSeries<T>> first{one + TruncatedSeries<T>::monomial(1, T{1}, order),
                                          geometric<T>(2, 1, order)};
    factors.push_back(DualSeries<T>::from_z_polynomial(first));
    for (int n = 2; n <= order; ++n) {
        if (n % t == 0) continue;
        std::vector<TruncatedSeries<T>> poly{one, TruncatedSeries<T>::monomial(n, T{1}, order),
                                             geometric<T>(2 * n, n, order)};
        factors.push_back(DualSeries<T>::from_z_polynomial(poly));
    }
}

}  // namespace detail

/// b_{3,2} through jets of the two defining products: hooks of length two
/// count repeated parts and parts s >= 2, minus parts s >= 2 whose
/// predecessor s - 1 is also present.
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_b_3_2_derivation(int order) {
    std::vector<DualSeries<T>> counted;
    detail::append_repeated_or_gapped_factors<T>(3, order, counted);
    const auto one = TruncatedSeries<T>::one(order);
    std::vector<DualSeries<T>> adjacent;
    for (int base = 1; base <= order; base += 3) {
        const auto a = geometric<T>(base, base, order);
        const auto b = geometric<T>(base + 1, base + 1, order);
        std::vector<TruncatedSeries<T>> poly{one + a + b, a * b};
        adjacent.push_back(DualSeries<T>::from_z_polynomial(poly));
    }
    return dual_product<T>(counted, order).deriv - dual_product<T>(adjacent, order).deriv;
}

/// sum b_{4,2}(n) q^n = (q^4;q^4)/(q;q) (q^2 + sum_{n>=2, 4 does not divide n} (q^n + q^2n)
///                                        - (q^3 + q^5)/(1 - q^8))
///
/// The subtracted term counts parts s = 4j+2 and s = 4j+3 whose predecessor
/// is present, which contributes q^(8j+3) + q^(8j+5) per residue block.
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_b_4_2(int order) {
    auto bracket = detail::repeated_or_gapped_numerator<T>(4, order) -
                   detail::over_one_minus(TruncatedSeries<T>::polynomial({{3, 1}, {5, 1}}, order), 8);
    return detail::regular_partition_gf<T>(4, order) * bracket;
}

/// The published closed form for b_{4,2}, with the subtracted term
/// (q^4;q^8)_inf sum_{n>=0} (q^(8n+3) + q^(8n+5))/(1 - q^(8n+4)).
/// It agrees with b_{4,2} through q^14 and differs from q^15 on; kept for
/// comparison only.
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_b_4_2_displayed(int order) {
    TruncatedSeries<T> sum(order);
    for (int n = 0; 8 * n + 3 <= order; ++n) {
        sum += detail::over_one_minus(TruncatedSeries<T>::polynomial({{8 * n + 3, 1}, {8 * n + 5, 1}}, order), 8 * n + 4);
    }
    auto bracket = detail::repeated_or_gapped_numerator<T>(4, order) - q_pochhammer<T>(4, 8, order) * sum;
    return detail::regular_partition_gf<T>(4, order) * bracket;
}

/// b_{4,2} through jets of the defining products. In each residue block
/// (a, b, c) = (4j+1, 4j+2, 4j+3) the subtracted statistic is
/// [a and b present] + [b and c present].
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_b_4_2_derivation(int order) {
    std::vector<DualSeries<T>> counted;
    detail::append_repeated_or_gapped_factors<T>(4, order, counted);
    const auto one = TruncatedSeries<T>::one(order);
    std::vector<DualSeries<T>> adjacent;
    for (int base = 1; base <= order; base += 4) {
        const auto a = geometric<T>(base, base, order);
        const auto b = geometric<T>(base + 1, base + 1, order);
        const auto c = geometric<T>(base + 2, base + 2, order);
        std::vector<TruncatedSeries<T>> poly{one + a + b + c + a * c, b * (a + c), a * b * c};
        adjacent.push_back(DualSeries<T>::from_z_polynomial(poly));
    }
    return dual_product<T>(counted, order).deriv - dual_product<T>(adjacent, order).deriv;
}

/// sum (b_{2,2}(n) - b_{2,3}(n)) q^n = (-q^4;q)_inf ((q^2 + q^7)/(1 - q^3) + q^4 + q^5 + q^7 + q^8)
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_diff_2_23(int order) {
    auto bracket = detail::over_one_minus(TruncatedSeries<T>::polynomial({{2, 1}, {7, 1}}, order), 3) +
                   TruncatedSeries<T>::polynomial({{4, 1}, {5, 1}, {7, 1}, {8, 1}}, order);
    return neg_q_pochhammer<T>(4, 1, order) * bracket;
}

/// sum (b_{3,2}(n) - b_{3,1}(n)) q^n
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_diff_3_12(int order) {
    return gf_b_3_2<T>(order) - gf_b_t_1<T>(3, order);
}

/// G_k(q) = sum (p_(k)(n) - p_(k+1)(n)) q^n
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_g_k(int k, int order) {
    detail::require_positive_k(k);
    return gf_p_k<T>(k, order) - gf_p_k<T>(k + 1, order);
}

/// H_k(q) = (q^k - q^(k+1))/(q^2;q)_inf + q^(k+1)
template <CoefficientType T = Coeff>
TruncatedSeries<T> gf_h_k(int k, int order) {
    detail::require_positive_k(k);
    auto num = TruncatedSeries<T>::polynomial({{k, 1}, {k + 1, -1}}, order);
    return num * gf_smallest_part_at_least_two<T>(order) + TruncatedSeries<T>::monomial(k + 1, T{1}, order);
}

// ---------------------------------------------------------------------------
// Registry

enum class GfTag {
    P,
    P_K,
    P_K_BIVARIATE,
    B_T_1,
    B_2_2,
    B_2_2_ALT,
    B_2_3,
    B_2_3_ALT,
    B_3_2,
    B_4_2,
    B_4_2_DISPLAYED,
    DIFF_2_23,
    DIFF_3_12,
    G_K,
    H_K_COROLLARY,
};

struct GfInfo {
    GfTag tag;
    std::string_view name;
    bool needs_k;
    bool needs_t;
};

inline constexpr GfInfo kGfRegistry[] = {
    {GfTag::P, "p", false, false},
    {GfTag::P_K, "p_k", true, false},
    {GfTag::P_K_BIVARIATE, "p_k_bivariate", true, false},
    {GfTag::B_T_1, "b_t_1", false, true},
    {GfTag::B_2_2, "b_2_2", false, false},
    {GfTag::B_2_2_ALT, "b_2_2_alt", false, false},
    {GfTag::B_2_3, "b_2_3", false, false},
    {GfTag::B_2_3_ALT, "b_2_3_alt", false, false},
    {GfTag::B_3_2, "b_3_2", false, false},
    {GfTag::B_4_2, "b_4_2", false, false},
    {GfTag::B_4_2_DISPLAYED, "b_4_2_displayed", false, false},
    {GfTag::DIFF_2_23, "diff_2_23", false, false},
    {GfTag::DIFF_3_12, "diff_3_12", false, false},
    {GfTag::G_K, "g_k", true, false},
    {GfTag::H_K_COROLLARY, "h_k", true, false},
};

inline const GfInfo& gf_info(GfTag tag) {
    for (const auto& info : kGfRegistry) {
        if (info.tag == tag) return info;
    }
    throw std::logic_error("unregistered generating function");
}

inline std::optional<GfTag> parse_gf_name(std::string_view name) {
    for (const auto& info : kGfRegistry) {
        if (info.name == name) return info.tag;
    }
    return std::nullopt;
}

struct GfId {
    GfTag tag = GfTag::P;
    int k = 0;
    int t = 0;
};

/// Univariate series for a registered id. P_K_BIVARIATE yields its
/// z-derivative at z = 1, i.e. the same series as P_K.
template <CoefficientType T = Coeff>
TruncatedSeries<T> evaluate(const GfId& id, int order) {
    switch (id.tag) {
        case GfTag::P: return gf_p<T>(order);
        case GfTag::P_K: return gf_p_k<T>(id.k, order);
        case GfTag::P_K_BIVARIATE: return gf_p_k_bivariate<T>(id.k, order).z_derivative_at_one();
        case GfTag::B_T_1: return gf_b_t_1<T>(id.t, order);
        case GfTag::B_2_2: return gf_b_2_2<T>(order, GfForm::Original);
        case GfTag::B_2_2_ALT: return gf_b_2_2<T>(order, GfForm::Rewritten);
        case GfTag::B_2_3: return gf_b_2_3<T>(order, GfForm::Original);
        case GfTag::B_2_3_ALT: return gf_b_2_3<T>(order, GfForm::Rewritten);
        case GfTag::B_3_2: return gf_b_3_2<T>(order);
        case GfTag::B_4_2: return gf_b_4_2<T>(order);
        case GfTag::B_4_2_DISPLAYED: return gf_b_4_2_displayed<T>(order);
        case GfTag::DIFF_2_23: return gf_diff_2_23<T>(order);
        case GfTag::DIFF_3_12: return gf_diff_3_12<T>(order);
        case GfTag::G_K: return gf_g_k<T>(id.k, order);
        case GfTag::H_K_COROLLARY: return gf_h_k<T>(id.k, order);
    }
    throw std::logic_error("unhandled generating function tag");
}

}  // namespace hookbias
