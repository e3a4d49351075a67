#include "pareto/labeling.hpp"
#include "pareto/generators.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace pareto;

namespace {

std::set<std::string> label_set(const RegionLabeling& lab) {
  std::set<std::string> out;
  for (const auto& p : lab.labels) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST(Labels, SphereProjection) {
  const auto d = gen_sphere_projection();
  const auto arr = build_arrangement(d);
  const auto lab = propagate_labels(arr, d);
  EXPECT_EQ(label_set(lab), (std::set<std::string>{"0", "1", "1+t", "1+t^2"}));
  EXPECT_TRUE(lab.labels[static_cast<size_t>(arr.bottom_face())].is_zero());
  EXPECT_EQ(lab.labels[static_cast<size_t>(arr.top_face())].to_string(), "1+t^2");
}

TEST(Labels, CuppedSphere) {
  const auto d = gen_cupped_sphere();
  const auto lab = propagate_labels(build_arrangement(d), d);
  EXPECT_EQ(label_set(lab), (std::set<std::string>{"0", "1", "2", "1+t", "1+t^2"}));
}

TEST(Labels, MissingEffectIsIncomplete) {
  auto d = gen_sphere_projection();
  d.effects.clear();
  try {
    propagate_labels(build_arrangement(d), d);
    FAIL() << "labels propagated without effects";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteAnnotation);
  }
}

TEST(Labels, WrongTotalIsInconsistent) {
  auto d = gen_sphere_projection();
  d.total_poly = PoincarePolynomial({1, 1});
  EXPECT_THROW(propagate_labels(build_arrangement(d), d), Error);
}

TEST(Labels, VertexDeltaVanishesOffCrossings) {
  const auto d = example_by_name("rotational");
  const auto arr = build_arrangement(d);
  const auto lab = propagate_labels(arr, d);
  for (size_t v = 0; v < arr.vertices.size(); ++v) {
    if (!arr.frame.strictly_contains(arr.vertices[v])) continue;
    const auto delta = vertex_delta(arr, lab, static_cast<int>(v));
    EXPECT_LE(delta.size(), static_cast<size_t>(d.n + 1));
  }
  EXPECT_EQ(poly_difference(PoincarePolynomial({1, 2}), PoincarePolynomial({1, 1, 1})), (std::vector<int>{0, 1, -1}));
}

TEST(InferEffects, RecoversSphereLabels) {
  auto d = gen_sphere_projection();
  const auto arr = build_arrangement(d);
  const auto want = propagate_labels(arr, d).labels;
  d.effects.clear();
  const auto solutions = infer_effects(arr, d);
  ASSERT_FALSE(solutions.empty());
  bool found = false;
  for (const auto& eff : solutions) {
    const auto lab = propagate_labels(arr, eff, d.total_poly);
    EXPECT_EQ(lab.labels[static_cast<size_t>(arr.top_face())], *d.total_poly);
    found = found || lab.labels == want;
  }
  EXPECT_TRUE(found);
}

TEST(InferEffects, KeepsGivenAnnotations) {
  const auto d = gen_cupped_sphere();
  const auto arr = build_arrangement(d);
  const auto solutions = infer_effects(arr, d);
  ASSERT_EQ(solutions.size(), 1u);
  EXPECT_EQ(propagate_labels(arr, solutions[0], d.total_poly).labels, propagate_labels(arr, d).labels);
}

TEST(InferEffects, ErasedCuppedSphereIsUnique) {
  auto d = gen_cupped_sphere();
  const auto arr = build_arrangement(d);
  const auto want = propagate_labels(arr, d).labels;
  d.effects.clear();
  const auto solutions = infer_effects(arr, d);
  ASSERT_EQ(solutions.size(), 1u);
  EXPECT_EQ(propagate_labels(arr, solutions[0], d.total_poly).labels, want);
}

TEST(InferEffects, ContradictoryTotalHasNoSolution) {
  auto d = gen_cupped_sphere();
  const auto arr = build_arrangement(d);
  d.effects.clear();
  d.total_poly = PoincarePolynomial({1, 1, 1, 1});
  EXPECT_TRUE(infer_effects(arr, d).empty());
}

TEST(InferEffects, SingleArcCreates) {
  SingularValueDiagram d;
  d.frame = {0.0, 0.0, 1.0, 1.0};
  d.total_poly = PoincarePolynomial({1});
  ParetoArc arc;
  arc.key = "only";
  arc.geometry = {Vec2{0.0, 0.7}, Vec2{0.7, 0.0}};
  const auto arr = build_arrangement({arc}, d.frame, Tolerance::for_frame(d.frame));
  const auto solutions = infer_effects(arr, d);
  ASSERT_EQ(solutions.size(), 1u);
  ASSERT_EQ(solutions[0].count("only"), 1u);
  EXPECT_EQ(solutions[0].at("only").effect, Effect::Create);
  EXPECT_EQ(label_set(propagate_labels(arr, solutions[0], d.total_poly)), (std::set<std::string>{"0", "1"}));
}

TEST(InferEffects, CapExceededThrows) {
  auto d = example_by_name("rotational");
  const auto arr = build_arrangement(d);
  d.effects.clear();
  try {
    infer_effects(arr, d, 1);
    FAIL() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}
