#include "pareto/oracle.hpp"
#include "pareto/labeling.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pareto;

namespace {

PoincarePolynomial whole(const SampledModel& m) { return betti(m, sublevel_complex(m, {1e9, 1e9})); }

int mismatches(const std::vector<PoincarePolynomial>& a, const std::vector<PoincarePolynomial>& b) {
  int n = 0;
  for (size_t k = 0; k < a.size(); ++k) n += a[k] == b[k] ? 0 : 1;
  return n + static_cast<int>(a.size() > b.size() ? a.size() - b.size() : b.size() - a.size());
}

}  // namespace

TEST(Oracle, ReferenceComplexes) {
  const auto oct = octahedron_model();
  EXPECT_TRUE(oct.boundary_squared_zero());
  EXPECT_EQ(whole(oct).to_string(), "1+t^2");
  const auto klein = klein_square_model();
  EXPECT_TRUE(klein.boundary_squared_zero());
  EXPECT_EQ(whole(klein).to_string(), "1+2t+t^2");
  const auto circle = circle_model(12, [](double x, double y) { return Vec2{x, y}; });
  EXPECT_EQ(whole(circle).to_string(), "1+t");
}

TEST(Oracle, ProductOfCircles) {
  const auto c = circle_model(6, [](double x, double y) { return Vec2{x, y}; });
  const auto torus = product_model(c, c, [](int, int) { return Vec2{0.0, 0.0}; });
  EXPECT_TRUE(torus.boundary_squared_zero());
  EXPECT_EQ(whole(torus).to_string(), "1+2t+t^2");
}

TEST(Oracle, SublevelOfSphereProjection) {
  const auto m = sphere_projection_model();
  EXPECT_TRUE(betti(m, sublevel_complex(m, {-2.0, -2.0})).is_zero());
  EXPECT_EQ(betti(m, sublevel_complex(m, {0.0, 0.0})).to_string(), "1");
  EXPECT_EQ(betti(m, sublevel_complex(m, {2.0, 2.0})).to_string(), "1+t^2");
}

TEST(Oracle, PbnRankAndOrder) {
  const auto m = sphere_projection_model();
  EXPECT_EQ(pbn_oracle(m, {0.0, 0.0}, {2.0, 2.0}, 0), 1);
  EXPECT_EQ(pbn_oracle(m, {0.0, 0.0}, {2.0, 2.0}, 2), 0);
  EXPECT_EQ(pbn_oracle(m, {2.0, 2.0}, {2.0, 2.0}, 2), 1);
  try {
    pbn_oracle(m, {1.0, 0.0}, {0.0, 1.0}, 0);
    FAIL() << "unordered pair accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Order);
  }
}

TEST(Oracle, RefinementStable) {
  const RotationalSpec spec{{1.0, 3.0}, {0, 2}, 2, 256};
  const auto arr = build_arrangement(gen_rotational(spec));
  const auto coarse = region_polynomials(rotational_model(spec, 96, 15, 32), arr);
  const auto fine = region_polynomials(rotational_model(spec, 160, 23, 48), arr);
  EXPECT_EQ(mismatches(coarse, fine), 0);
}

TEST(Oracle, CalibratedConventionMatches) {
  const RotationalSpec spec{{1.0, 3.0}, {0, 2}, 2, 256};
  const auto d = gen_rotational(spec);
  const auto arr = build_arrangement(d);
  EXPECT_EQ(mismatches(propagate_labels(arr, d).labels, region_polynomials(rotational_model(spec), arr)), 0);
}

// Flipping either switch of the convention must break agreement with the oracle.
TEST(Oracle, FlippedConventionsDisagree) {
  const RotationalSpec spec{{1.0, 3.0}, {0, 2}, 2, 256};
  const auto d = gen_rotational(spec);
  const auto model = rotational_model(spec);
  for (const IndexConvention conv : {IndexConvention{false, true}, IndexConvention{true, false},
                                     IndexConvention{false, false}}) {
    SCOPED_TRACE(testing::Message() << conv.corner_reads_j << conv.interior_tail_adds_one);
    const auto arr = build_arrangement(compute_critical_set(d, conv), d.frame, Tolerance::for_frame(d.frame));
    bool agrees = false;
    try {
      agrees = mismatches(propagate_labels(arr, d.effects, d.total_poly).labels, region_polynomials(model, arr)) == 0;
    } catch (const Error&) {
    }
    EXPECT_FALSE(agrees);
  }
}

TEST(Oracle, KleinLabelsMatchModel) {
  const auto d = gen_klein();
  const auto arr = build_arrangement(d);
  const auto lab = propagate_labels(arr, d);
  EXPECT_EQ(mismatches(lab.labels, region_polynomials(klein_projection_model(1024, 24), arr)), 0);
}

TEST(Oracle, KleinModelIsKleinBottle) {
  const auto m = klein_projection_model(64, 8);
  EXPECT_TRUE(m.boundary_squared_zero());
  EXPECT_EQ(whole(m).to_string(), "1+2t+t^2");
  EXPECT_DOUBLE_EQ(klein_radius(0.7, 1.1), klein_radius(0.7, -1.1));
  EXPECT_DOUBLE_EQ(klein_radius(0.7, 0.0), 1.0);
}
