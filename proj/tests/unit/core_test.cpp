#include "pareto/core.hpp"
#include "pareto/generators.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pareto;

TEST(TransverseIndex, CanonicalFlipsToUpperHalfPlane) {
  const TransverseIndex a = canonical_index({0.0, -1.0}, 2, 0);
  EXPECT_GT(a.v.y, 0.0);
  EXPECT_EQ(a.i, 0);
  EXPECT_EQ(a.j, 2);
  const TransverseIndex b = canonical_index({-1.0, 0.0}, 1, 3);
  EXPECT_GT(b.v.x, 0.0);
  EXPECT_EQ(b.i, 3);
  EXPECT_EQ(b.j, 1);
}

TEST(TransverseIndex, IdempotentAndSymmetric) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> k(0, 3);
  for (int n = 0; n < 500; ++n) {
    const Vec2 v{u(rng), n % 7 == 0 ? 0.0 : u(rng)};
    if (v.x == 0.0 && v.y == 0.0) continue;
    const int i = k(rng), j = k(rng);
    const TransverseIndex c = canonical_index(v, i, j);
    EXPECT_EQ(canonical_index(c.v, c.i, c.j), c);
    EXPECT_EQ(canonical_index(-1.0 * v, j, i), c);
  }
}

// A k-handle creates in degree k; the (k+1)-handle that kills it removes degree k.
TEST(Poincare, CreateThenCancellingKillIsIdentity) {
  for (const auto& p : {PoincarePolynomial(), PoincarePolynomial({1}), PoincarePolynomial({1, 2, 1})})
    for (int k = 0; k <= 3; ++k)
      EXPECT_EQ(poly_apply_delta(poly_apply_delta(p, k, Effect::Create), k + 1, Effect::Kill), p);
}

TEST(TransverseIndex, RejectsZeroVectorAndNegativeCounts) {
  EXPECT_THROW(canonical_index({0.0, 0.0}, 1, 1), Error);
  EXPECT_THROW(canonical_index({1.0, 0.0}, -1, 1), Error);
}

TEST(TransverseIndex, IndexAlongReadsBothSides) {
  const TransverseIndex idx = canonical_index({1.0, 1.0}, 0, 2);
  EXPECT_EQ(index_along(idx, {1.0, 0.0}), std::make_pair(0, 2));
  EXPECT_EQ(index_along(idx, {-1.0, 0.0}), std::make_pair(2, 0));
  EXPECT_THROW(index_along(idx, {1.0, -1.0}), Error);
}

TEST(Poincare, RenderingAndEuler) {
  EXPECT_EQ(PoincarePolynomial().to_string(), "0");
  EXPECT_EQ(PoincarePolynomial({1, 2, 1}).to_string(), "1+2t+t^2");
  EXPECT_EQ(PoincarePolynomial({0, 0, 1}).to_string(), "t^2");
  EXPECT_EQ(PoincarePolynomial({1, 2, 1}).euler_characteristic(), 0);
  EXPECT_EQ(PoincarePolynomial({1, 0, 1}).euler_characteristic(), 2);
  EXPECT_EQ(PoincarePolynomial({1, 0, 0}).degree(), 0);
}

TEST(Poincare, DeltaAndInverse) {
  const PoincarePolynomial one({1});
  const PoincarePolynomial p = poly_apply_delta(one, 1, Effect::Create);
  EXPECT_EQ(p, PoincarePolynomial({1, 1}));
  EXPECT_EQ(poly_apply_delta(p, 2, Effect::Kill), one);
  EXPECT_EQ(poly_unapply_delta(p, 1, Effect::Create), one);
  EXPECT_THROW(poly_apply_delta(one, 3, Effect::Kill), Error);
  EXPECT_THROW(poly_unapply_delta(one, 2, Effect::Create), Error);
  EXPECT_EQ(delta_of(2, Effect::Kill), (Monomial{-1, 1}));
  EXPECT_EQ(delta_of(2, Effect::Create), (Monomial{1, 2}));
}

TEST(Effects, StringRoundTrip) {
  EXPECT_EQ(effect_from_string(to_string(Effect::Create)), Effect::Create);
  EXPECT_EQ(effect_from_string(to_string(Effect::Kill)), Effect::Kill);
  EXPECT_THROW(effect_from_string("destroy"), Error);
}

TEST(Validation, ExamplesAreValid) {
  for (const auto& name : example_names()) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(validate_diagram(example_by_name(name)).empty());
  }
  EXPECT_THROW(example_by_name("torus-of-doom"), Error);
}

TEST(Validation, ReportsBrokenIndexSum) {
  SingularValueDiagram d = gen_sphere_projection();
  d.arcs[0].index.j += 1;
  EXPECT_FALSE(validate_diagram(d).empty());
  EXPECT_THROW(require_valid(d), Error);
}

TEST(Validation, ReportsMissingCusp) {
  SingularValueDiagram d = gen_cupped_sphere();
  ASSERT_FALSE(d.cusps.empty());
  d.cusps.pop_back();
  EXPECT_FALSE(validate_diagram(d).empty());
}

TEST(Validation, ReportsArcOutsideFrame) {
  SingularValueDiagram d = gen_sphere_projection();
  for (auto& p : d.arcs[0].points) p = 10.0 * p;
  EXPECT_FALSE(validate_diagram(d).empty());
}

TEST(Tangencies, CircleHasFourAxisTangencies) {
  const SingularValueDiagram d = gen_sphere_projection();
  const auto t = axis_tangencies(d.arcs[0]);
  ASSERT_EQ(t.size(), 4u);
  int vertical = 0;
  for (const auto& x : t) vertical += x.axis == TangencyAxis::Vertical;
  EXPECT_EQ(vertical, 2);
}
