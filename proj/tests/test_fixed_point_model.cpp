#include <gtest/gtest.h>

#include <random>

#include "chiy/fixed_point_model.hpp"
#include "chiy/random_models.hpp"
#include "test_support.hpp"

using namespace chiy;
using testing_support::kind_of;
using testing_support::W;

TEST(WeightMultiset, SignCounts) {
  EXPECT_EQ(n_plus(W({{1, 1}})), 1);
  EXPECT_EQ(n_minus(W({{1, 1}})), 0);
  EXPECT_EQ(n_plus(W({{-1, 1}})), 0);
  EXPECT_EQ(n_minus(W({{-1, 1}})), 1);
  const WeightMultiset ws = W({{1, 1}, {2, 1}, {-3, 2}});
  EXPECT_EQ(n_plus(ws), 2);
  EXPECT_EQ(n_minus(ws), 2);
  EXPECT_EQ(ws.total(), 4);
}

TEST(WeightMultiset, Rendering) {
  EXPECT_EQ(W({{2, 3}, {-1, 1}}).str(), "{-1:1, 2:3}");
  EXPECT_EQ(WeightMultiset().str(), "{}");
  EXPECT_EQ(WeightMultiset::of({2, 2, 4}), W({{2, 2}, {4, 1}}));
}

TEST(SubgroupRestrict, Examples) {
  EXPECT_EQ(subgroup_restrict(W({{1, 1}, {2, 1}}), 2), W({{2, 1}}));
  const WeightMultiset ws = W({{3, 2}, {-6, 1}, {4, 1}});
  EXPECT_EQ(subgroup_restrict(ws, 1), ws);
  EXPECT_EQ(subgroup_restrict(ws, 3), W({{3, 2}, {-6, 1}}));
  EXPECT_EQ(kind_of([&] { (void)subgroup_restrict(ws, 0); }), ErrorKind::InvalidArgument);
}

namespace {

bool is_submultiset(const WeightMultiset& a, const WeightMultiset& b) {
  for (const auto& [w, n] : a.entries()) {
    if (b.multiplicity(w) < n) return false;
  }
  return true;
}

}  // namespace

TEST(SubgroupRestrict, RandomizedProperties) {
  Rng rng(1234);
  std::uniform_int_distribution<long> kd(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightMultiset ws = random_weight_multiset(rng, 12, 4, 5);
    const long k = kd(rng);
    const long l = kd(rng);
    const WeightMultiset r = subgroup_restrict(ws, k);
    EXPECT_TRUE(is_submultiset(r, ws));
    EXPECT_EQ(subgroup_restrict(r, k), r);
    EXPECT_TRUE(is_submultiset(subgroup_restrict(ws, k * l), r));
    EXPECT_EQ(n_plus(ws) + n_minus(ws), ws.total());
    EXPECT_EQ(negated(negated(ws)), ws);
    EXPECT_EQ(n_plus(negated(ws)), n_minus(ws));
  }
}

TEST(ReduceGkm, ProjectiveLine) {
  GKMPointSet g{1, {{"0", {{1}}}, {"inf", {{-1}}}}, {1}};
  const VarietyModel m = reduce_gkm(g);
  ASSERT_EQ(m.components.size(), 2U);
  EXPECT_EQ(m.ambient_dim, 1);
  EXPECT_EQ(m.components[0].normal_weights, W({{1, 1}}));
  EXPECT_EQ(m.components[1].normal_weights, W({{-1, 1}}));
  EXPECT_TRUE(validate(m).empty());
}

namespace {

// P^2 with multi-weights e_j - e_i at p_i.
GKMPointSet projective_plane_gkm(std::vector<long> cochar) {
  GKMPointSet g;
  g.rank = 3;
  g.cocharacter = std::move(cochar);
  for (int i = 0; i < 3; ++i) {
    GKMPoint p{"p" + std::to_string(i), {}};
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      std::vector<long> v(3, 0);
      v[static_cast<std::size_t>(j)] += 1;
      v[static_cast<std::size_t>(i)] -= 1;
      p.multiweights.push_back(v);
    }
    g.points.push_back(p);
  }
  return g;
}

}  // namespace

TEST(ReduceGkm, ProjectivePlane) {
  const VarietyModel m = reduce_gkm(projective_plane_gkm({0, 1, 2}));
  ASSERT_EQ(m.components.size(), 3U);
  EXPECT_EQ(m.ambient_dim, 2);
  EXPECT_EQ(m.components[0].normal_weights, W({{1, 1}, {2, 1}}));
  EXPECT_EQ(m.components[1].normal_weights, W({{-1, 1}, {1, 1}}));
  EXPECT_EQ(m.components[2].normal_weights, W({{-2, 1}, {-1, 1}}));
  EXPECT_EQ(kind_of([] { (void)reduce_gkm(projective_plane_gkm({1, 1, 1})); }), ErrorKind::NonGenericCocharacter);
}

TEST(ReduceGkm, RejectsMalformedInput) {
  GKMPointSet wrong_rank{2, {{"a", {{1}}}}, {1, 2}};
  EXPECT_EQ(kind_of([&] { (void)reduce_gkm(wrong_rank); }), ErrorKind::SchemaError);
  GKMPointSet ragged{1, {{"a", {{1}}}, {"b", {{1}, {2}}}}, {1}};
  EXPECT_EQ(kind_of([&] { (void)reduce_gkm(ragged); }), ErrorKind::SchemaError);
}

namespace {

VarietyModel p1_model() {
  return VarietyModel{"P1", 1, {fixed_point("0", W({{1, 1}})), fixed_point("inf", W({{-1, 1}}))}};
}

bool has(const std::vector<Violation>& v, ViolationKind k) {
  for (const auto& x : v) {
    if (x.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(p1_model()).empty());

  VarietyModel zero = p1_model();
  zero.components[0].normal_weights = W({{0, 1}});
  const auto vz = validate(zero);
  ASSERT_TRUE(has(vz, ViolationKind::ZeroWeight));
  EXPECT_EQ(vz.front().component_id, "0");

  VarietyModel mismatch = p1_model();
  mismatch.components[1].normal_weights = W({{-1, 2}});
  EXPECT_TRUE(has(validate(mismatch), ViolationKind::DimensionMismatch));

  VarietyModel dup = p1_model();
  dup.components[1].id = "0";
  EXPECT_TRUE(has(validate(dup), ViolationKind::DuplicateId));

  VarietyModel pt_chi = p1_model();
  pt_chi.components[0].chi_y = YPolynomial({1, -1});
  EXPECT_TRUE(has(validate(pt_chi), ViolationKind::PointChiY));

  VarietyModel empty{"empty", 1, {}};
  EXPECT_TRUE(has(validate(empty), ViolationKind::EmptyModel));

  VarietyModel comp{"c", 2, {{"F", 1, YPolynomial({1, -1, 1}), std::nullopt, W({{2, 1}})}}};
  EXPECT_TRUE(has(validate(comp), ViolationKind::ChiYDegree));
  comp.components[0].chi_y = YPolynomial({1, -1});
  comp.components[0].poincare = Polynomial({1, 0, 0, 0, 1});
  EXPECT_TRUE(has(validate(comp), ViolationKind::PoincareDegree));
  comp.components[0].poincare = Polynomial({1, 0, -1});
  EXPECT_TRUE(has(validate(comp), ViolationKind::PoincareCoefficients));

  EXPECT_EQ(kind_of([&] { require_valid(zero); }), ErrorKind::ValidationError);
}

TEST(Opposite, NegatesEveryWeight) {
  const VarietyModel m = opposite(p1_model());
  EXPECT_EQ(m.components[0].normal_weights, W({{-1, 1}}));
  EXPECT_EQ(m.components[1].normal_weights, W({{1, 1}}));
  const VarietyModel p1 = p1_model();
  EXPECT_TRUE(p1.is_isolated());
  ASSERT_NE(p1.find("inf"), nullptr);
  EXPECT_EQ(p1.find("nope"), nullptr);
}
