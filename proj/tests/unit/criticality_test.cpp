#include "pareto/arrangement.hpp"
#include "pareto/generators.hpp"

#include <gtest/gtest.h>

using namespace pareto;

TEST(MonotoneSplit, CircleSplitsIntoFourRuns) {
  const SingularValueDiagram d = gen_sphere_projection();
  const SplitResult s = monotone_split(d.arcs[0]);
  ASSERT_EQ(s.segments.size(), 4u);
  int descending = 0;
  for (const auto& seg : s.segments) descending += seg.kind == Monotonicity::Descending;
  EXPECT_EQ(descending, 2);
}

TEST(CriticalSet, SphereHasTwoCornersAndFourRays) {
  const auto pareto = compute_critical_set(gen_sphere_projection());
  int corners = 0, rays = 0;
  for (const auto& p : pareto) (p.kind == ParetoKind::Corner ? corners : rays)++;
  EXPECT_EQ(corners, 2);
  EXPECT_EQ(rays, 4);
  for (const auto& p : pareto) {
    if (p.kind != ParetoKind::Corner) continue;
    for (size_t k = 0; k + 1 < p.geometry.size(); ++k) EXPECT_LT(p.geometry[k].x, p.geometry[k + 1].x);
  }
}

TEST(CriticalSet, CornerCellDimsOnRotationalFixture) {
  const auto pareto = compute_critical_set(example_by_name("rotational"));
  std::multiset<int> dims;
  for (const auto& p : pareto)
    if (p.kind == ParetoKind::Corner) dims.insert(p.cell_dim);
  EXPECT_EQ(dims, (std::multiset<int>{0, 0, 2, 2}));
}

TEST(Arrangement, EulerFormulaHolds) {
  for (const auto& name : example_names()) {
    SCOPED_TRACE(name);
    const Arrangement arr = build_arrangement(example_by_name(name));
    EXPECT_TRUE(arr.euler_ok());
    EXPECT_GE(arr.bottom_face(), 0);
    EXPECT_GE(arr.top_face(), 0);
    EXPECT_NE(arr.bottom_face(), arr.top_face());
  }
}

TEST(Arrangement, LocateMatchesFaceSamples) {
  const Arrangement arr = build_arrangement(example_by_name("cupped-sphere"));
  for (size_t f = 0; f < arr.faces.size(); ++f) EXPECT_EQ(arr.locate(arr.faces[f].sample), static_cast<int>(f));
  EXPECT_THROW(arr.locate({100.0, 100.0}), Error);
}

TEST(Arrangement, RejectsTriplePoint) {
  std::vector<ParetoArc> arcs;
  const Frame frame = gen_sphere_projection().frame;
  for (int k = 0; k < 3; ++k) {
    ParetoArc p;
    p.key = "line" + std::to_string(k);
    const double slope = 0.25 * (k - 1);
    p.geometry = {Vec2{frame.x0, slope * frame.x0}, Vec2{frame.x1, slope * frame.x1}};
    arcs.push_back(p);
  }
  try {
    build_arrangement(arcs, frame, Tolerance::for_frame(frame));
    FAIL() << "triple point accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Degeneracy);
  }
}
