#include "hookbias/bivariate.hpp"
#include "hookbias/dual_series.hpp"
#include "hookbias/genfun.hpp"
#include "hookbias/oracle.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"

namespace hookbias {
namespace {

using S = TruncatedSeries<Coeff>;
using D = DualSeries<Coeff>;
using B = BivariateSeries<Coeff>;

TEST(DualSeriesTest, SingleAndEmptyProducts) {
    const int order = 8;
    const std::vector<D> single{D::linear(S::one(order), S::monomial(1, 1, order))};
    const auto d = dual_product<Coeff>(single, order);
    EXPECT_EQ(d.deriv, S::monomial(1, 1, order));
    EXPECT_EQ(d.value, S::polynomial({{0, 1}, {1, 1}}, order));

    const auto empty = dual_product<Coeff>(std::span<const D>{}, order);
    EXPECT_EQ(empty.value, S::one(order));
    EXPECT_EQ(empty.deriv, S(order));
}

TEST(DualSeriesTest, OddPartsOneHooks) {
    const int order = 12;
    std::vector<D> factors;
    for (int n = 1; n <= order; n += 2) factors.push_back(D::linear(S::one(order), geometric(n, n, order)));
    const auto d = dual_product<Coeff>(factors, order);
    EXPECT_EQ(d.deriv[3], 2);
    EXPECT_EQ(d.value, invert_unit(q_pochhammer(1, 2, order)));
}

TEST(DualSeriesTest, RejectsNonUnitFactor) {
    const std::vector<D> bad{D::linear(S::polynomial({{0, 2}}, 4), S(4))};
    EXPECT_THROW(dual_product<Coeff>(bad, 4), std::domain_error);
}

TEST(DualSeriesTest, ZPolynomialJet) {
    // 1 + z q + z^2 q^2 at z = 1: value 1 + q + q^2, derivative q + 2q^2.
    const std::vector<S> coeffs{S::one(5), S::monomial(1, 1, 5), S::monomial(2, 1, 5)};
    const auto d = D::from_z_polynomial(coeffs);
    EXPECT_EQ(d.value, S::polynomial({{0, 1}, {1, 1}, {2, 1}}, 5));
    EXPECT_EQ(d.deriv, S::polynomial({{1, 1}, {2, 2}}, 5));
}

// The jet product against two independent routes: the full bivariate
// product (sum of m * c_{m,n}) and the logarithmic-derivative formula
// value * sum_j c_j / (v_j + c_j).
TEST(DualSeriesTest, AgreesWithBivariateAndLogDerivative) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int order = std::uniform_int_distribution<int>(1, 40)(rng);
        const int count = std::uniform_int_distribution<int>(0, 12)(rng);
        std::vector<D> jets;
        std::vector<B> bivariates;
        S log_sum(order);
        for (int j = 0; j < count; ++j) {
            auto v = testing::random_sparse_series(rng, order, 4);
            v.set(0, 1);
            auto c = testing::random_sparse_series(rng, order, 4);
            jets.push_back(D::linear(v, c));
            bivariates.push_back(B::linear_in_z(v, c, count));
            log_sum += c * invert_unit(v + c);
        }
        const auto d = dual_product<Coeff>(jets, order);
        const auto b = bivariate_product<Coeff>(bivariates, count, order);
        EXPECT_EQ(d.value, b.collapse_at_z_one());
        EXPECT_EQ(d.deriv, b.z_derivative_at_one());
        EXPECT_EQ(d.deriv, d.value * log_sum);
    }
}

TEST(BivariateTest, HanFormulaCoefficients) {
    const auto f1 = gf_p_k_bivariate(1, 10);
    EXPECT_EQ(f1.collapse_at_z_one()[4], 5);
    EXPECT_EQ(f1.coeff(2, 3), 1);
    EXPECT_EQ(f1.coeff(1, 3), 2);
    EXPECT_EQ(gf_p_k_bivariate(2, 10).z_derivative_at_one()[6], 16);
}

TEST(BivariateTest, HanFormulaMatchesOracleHistogram) {
    for (int k = 1; k <= 4; ++k) {
        const auto f = gf_p_k_bivariate(k, 22);
        for (int n = 0; n <= 22; ++n) {
            const auto hist = oracle_ordinary_bivariate(n, k);
            for (int m = 0; m <= f.z_degree(); ++m) {
                const auto it = hist.find(m);
                const Coeff expected = it == hist.end() ? 0 : it->second;
                EXPECT_TRUE(f.coeff(m, n) == expected) << "k=" << k << " m=" << m << " n=" << n;
            }
        }
    }
}

TEST(BivariateTest, ShiftedZBinomialMatchesGenericProduct) {
    const int order = 15;
    const int zdeg = 4;
    auto direct = B::from_series(S::one(order), zdeg);
    direct.mul_shifted_z_binomial(3);
    direct.mul_shifted_z_binomial(5);
    auto factor = [&](int e) {
        return B::linear_in_z(S::polynomial({{0, 1}, {e, -1}}, order), S::monomial(e, 1, order), zdeg);
    };
    EXPECT_EQ(direct, factor(3) * factor(5));
}

}  // namespace
}  // namespace hookbias
