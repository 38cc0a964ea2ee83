#include <gtest/gtest.h>

#include "chiy/builders.hpp"
#include "chiy/random_models.hpp"
#include "chiy/weight_recovery.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace chiy;
using testing_support::kind_of;
using testing_support::W;

namespace {

const YPolynomial y = YPolynomial::x();

std::vector<Rational> to_rationals(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(DeltaFromWeights, Examples) {
  EXPECT_EQ(delta_from_weights(WeightMultiset()), LocalizedClass(YPolynomial(1)));

  const ThetaPolynomial theta_plus_y(std::vector<YPolynomial>{y, YPolynomial(1)});
  const ThetaPolynomial one_plus_y_theta(std::vector<YPolynomial>{YPolynomial(1), y});
  const std::vector<DenominatorFactor> f1{{1, 1}};
  EXPECT_EQ(delta_from_weights(W({{1, 1}})), LocalizedClass::from_factors(theta_plus_y, 0, f1));

  const LocalizedClass d = delta_from_weights(W({{1, 1}, {-1, 1}}));
  EXPECT_EQ(d.numerator(), -(theta_plus_y * one_plus_y_theta));
  EXPECT_EQ(d.theta_shift(), 0);
  EXPECT_EQ(d.cyclotomic_exponents(), (std::map<long, long>{{1, 2}}));

  EXPECT_EQ(kind_of([] { (void)delta_from_weights(W({{0, 1}})); }), ErrorKind::ZeroWeight);
}

TEST(DeltaFromWeights, MatchesDirectProductAtRationalPoints) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightMultiset ws = random_weight_multiset(rng, 6, 3, 3);
    const LocalizedClass d = delta_from_weights(ws);
    for (const Rational& t0 : {Rational(2), Rational(-1, 3), Rational(3, 2)}) {
      EXPECT_EQ(evaluate_theta(d, t0), oracle::to_poly(oracle::delta_at(ws.entries(), mpq_class(t0.str())))) << ws.str();
    }
  }
}

TEST(PoleProfile, Examples) {
  const PoleProfile a = pole_profile(delta_from_weights(W({{1, 1}, {-1, 1}})));
  EXPECT_EQ(a.orders, (std::map<long, long>{{1, 2}}));
  EXPECT_EQ(a.w_max, 1);

  const PoleProfile b = pole_profile(delta_from_weights(W({{1, 1}, {4, 1}})));
  EXPECT_EQ(b.orders, (std::map<long, long>{{1, 2}, {2, 1}, {4, 1}}));
  EXPECT_EQ(b.w_max, 4);

  const PoleProfile c = pole_profile(LocalizedClass(YPolynomial(1)));
  EXPECT_TRUE(c.orders.empty());
  EXPECT_EQ(c.w_max, 0);
}

TEST(SeriesProfile, Examples) {
  EXPECT_EQ(series_profile(delta_from_weights(W({{1, 1}, {-1, 1}})), 1).coeffs, to_rationals({0}));
  EXPECT_EQ(series_profile(delta_from_weights(W({{1, 1}, {4, 1}})), 4).coeffs, to_rationals({-1, -1, -1, -2}));
  EXPECT_EQ(series_profile(delta_from_weights(W({{2, 1}})), 2).coeffs, to_rationals({0, -1}));
}

TEST(RecoverWeights, Examples) {
  EXPECT_EQ(recover_weights(delta_from_weights(W({{1, 1}, {-1, 1}}))), W({{1, 1}, {-1, 1}}));
  EXPECT_EQ(recover_weights(delta_from_weights(W({{1, 1}, {4, 1}}))), W({{1, 1}, {4, 1}}));
  EXPECT_TRUE(recover_weights(LocalizedClass(YPolynomial(1))).empty());

  const VarietyModel g24 = grassmannian(2, 4, std::vector<long>{1, 2, 3, 4});
  EXPECT_EQ(recover_weights(delta_from_weights(g24.find("{1,2}")->normal_weights)), W({{1, 1}, {2, 2}, {3, 1}}));
}

TEST(RecoverWeights, RejectsNonDeltaInput) {
  const ThetaPolynomial theta_plus_y(std::vector<YPolynomial>{y, YPolynomial(1)});
  const std::vector<DenominatorFactor> f1{{1, 1}};
  // 2 (theta + y)/(theta - 1) has the right poles but the wrong scale
  const LocalizedClass twice = LocalizedClass::from_factors(theta_plus_y * YPolynomial(2), 0, f1);
  EXPECT_EQ(kind_of([&] { (void)recover_weights(twice); }), ErrorKind::InconsistentDelta);
  EXPECT_EQ(kind_of([] { (void)recover_weights(LocalizedClass(YPolynomial({1, -1}))); }), ErrorKind::InconsistentDelta);
  // half-weight series coefficient
  const LocalizedClass half = LocalizedClass::from_factors(theta_plus_y * YPolynomial(Rational(1, 2)), 0, f1);
  EXPECT_EQ(kind_of([&] { (void)recover_weights(half); }), ErrorKind::InconsistentDelta);
}

TEST(Kontr, RelationAndImage) {
  const KontrReport r = kontr_relation_check();
  EXPECT_TRUE(r.combination_is_zero);
  EXPECT_TRUE(r.combination.is_zero());
  EXPECT_EQ(r.image_combination, YPolynomial({-1, -2, -1}));
  EXPECT_TRUE(r.image_nonzero);
  EXPECT_EQ(subgroup_cell_factor(W({{2, 1}, {4, 1}}), 2), YPolynomial({0, 0, 1}));

  // the same combination assembled independently
  const LocalizedClass combo = delta_from_weights(W({{1, 1}, {4, 1}})) - delta_from_weights(W({{1, 1}, {3, 1}})) +
                               delta_from_weights(W({{2, 2}})) + delta_from_weights(W({{3, 1}, {4, 1}})) -
                               delta_from_weights(W({{2, 1}, {4, 1}})) * LocalizedClass(YPolynomial(2));
  EXPECT_TRUE(combo.is_zero());
}

// Randomized properties

TEST(Properties, RoundTripAndProfileFormulas) {
  Rng rng(200);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightMultiset ws = random_weight_multiset(rng, 12, 4, 4);
    const LocalizedClass d = delta_from_weights(ws);
    EXPECT_EQ(recover_weights(d), ws);

    const PoleProfile poles = pole_profile(d);
    EXPECT_EQ(poles.orders, oracle::pole_orders(ws.entries())) << ws.str();
    const std::vector<long> b = oracle::series_coefficients(ws.entries(), poles.w_max);
    EXPECT_EQ(series_profile(d, poles.w_max).coeffs, to_rationals(b)) << ws.str();
  }
}

TEST(Properties, MultiplicativityAndSignFlip) {
  Rng rng(201);
  for (int trial = 0; trial < 60; ++trial) {
    const WeightMultiset a = random_weight_multiset(rng, 8, 3, 3);
    const WeightMultiset b = random_weight_multiset(rng, 8, 3, 3);
    EXPECT_EQ(delta_from_weights(a + b), delta_from_weights(a) * delta_from_weights(b));
    EXPECT_EQ(recover_weights(delta_from_weights(negated(a))), negated(recover_weights(delta_from_weights(a))));
  }
}

TEST(Properties, LimitCompatibility) {
  Rng rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const WeightMultiset ws = random_weight_multiset(rng, 10, 3, 4);
    const LocalizedClass d = delta_from_weights(ws);
    EXPECT_EQ(limit_theta(d, LimitDirection::to_zero), oracle::to_poly(oracle::neg_y_pow(ws.n_plus())));
    EXPECT_EQ(limit_theta(d, LimitDirection::to_infinity), oracle::to_poly(oracle::neg_y_pow(ws.n_minus())));
  }
}
