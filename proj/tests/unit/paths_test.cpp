#include "pareto/barcodes.hpp"
#include "pareto/morse.hpp"
#include "pareto/generators.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pareto;

namespace {

struct Loaded {
  SingularValueDiagram d;
  Arrangement arr;
  RegionLabeling lab;
  explicit Loaded(const std::string& name)
      : d(example_by_name(name)), arr(build_arrangement(d)), lab(propagate_labels(arr, d)) {}
};

}  // namespace

TEST(Paths, DiagonalThroughSphere) {
  const Loaded s("sphere");
  const Vec2 a = s.arr.frame.lower_left(), b = s.arr.frame.upper_right();
  const auto p = path_from_realization(s.arr, s.lab, {a, 0.5 * (a + b) + Vec2{0.013, -0.011}, b});
  ASSERT_FALSE(p.crossings.empty());
  EXPECT_EQ(p.crossings.front().cell_dim, 0);
  PoincarePolynomial acc;
  for (size_t k = 0; k < p.crossings.size(); ++k) {
    if (k > 0) EXPECT_LT(p.crossings[k - 1].s, p.crossings[k].s);
    acc = poly_apply_delta(acc, p.crossings[k].cell_dim, p.crossings[k].effect);
  }
  EXPECT_EQ(acc.to_string(), "1+t^2");
}

TEST(Paths, NonMonotoneRejected) {
  const Loaded s("sphere");
  const Vec2 a = s.arr.frame.lower_left(), b = s.arr.frame.upper_right();
  try {
    trace_crossings(s.arr, s.lab, {a, Vec2{b.x, a.y + 0.1}, Vec2{a.x + 0.1, b.y}, b});
    FAIL() << "non-monotone polyline accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Order);
  }
}

TEST(Paths, RandomPolylineIsMonotone) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto pl = random_monotone_polyline({0.0, 0.0}, {2.0, 3.0}, 8, rng);
    ASSERT_EQ(pl.size(), 9u);
    EXPECT_EQ(pl.back(), (Vec2{2.0, 3.0}));
    for (size_t i = 0; i + 1 < pl.size(); ++i) {
      EXPECT_LE(pl[i].x, pl[i + 1].x);
      EXPECT_LE(pl[i].y, pl[i + 1].y);
    }
  }
}

TEST(Paths, ComposedDeltaReachesTopLabel) {
  for (const auto& name : example_names()) {
    SCOPED_TRACE(name);
    const Loaded s(name);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
      const auto p = random_path(s.arr, s.lab, rng);
      PoincarePolynomial acc;
      for (const auto& c : p.crossings) acc = poly_apply_delta(acc, c.cell_dim, c.effect);
      EXPECT_EQ(acc, s.lab.labels[static_cast<size_t>(s.arr.top_face())]);
    }
  }
}

TEST(RepFamily, SequencesAreDistinctAndSorted) {
  const Loaded s("cupped-sphere");
  const auto fam = rep_family(s.arr, s.lab);
  EXPECT_FALSE(fam.truncated);
  ASSERT_FALSE(fam.paths.empty());
  std::set<std::vector<std::string>> seen;
  for (size_t k = 0; k < fam.paths.size(); ++k) {
    EXPECT_TRUE(seen.insert(fam.paths[k].key_sequence()).second);
    if (k > 0) EXPECT_LE(fam.paths[k - 1].crossings.size(), fam.paths[k].crossings.size());
  }
}

TEST(RepFamily, CoversRandomPaths) {
  const Loaded s("rotational");
  const auto fam = rep_family(s.arr, s.lab);
  std::set<std::vector<std::string>> seqs;
  for (const auto& p : fam.paths) seqs.insert(p.key_sequence());
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) EXPECT_TRUE(seqs.count(random_path(s.arr, s.lab, rng).key_sequence()));
}

TEST(RepFamily, TruncatesAtCap) {
  const Loaded s("klein");
  const auto fam = rep_family(s.arr, s.lab, 5);
  EXPECT_TRUE(fam.truncated);
  EXPECT_EQ(fam.paths.size(), 5u);
}

TEST(Barcodes, SpherePathHasTwoInfiniteBars) {
  const Loaded s("sphere");
  const auto fam = rep_family(s.arr, s.lab);
  ASSERT_FALSE(fam.paths.empty());
  const Barcode b = compute_barcode(fam.paths.front());
  EXPECT_EQ(b.count(0), 1);
  EXPECT_EQ(b.infinite_count(0), 1);
  EXPECT_EQ(b.count(2), 1);
  EXPECT_EQ(b.count(1), 0);
}

TEST(Barcodes, KillPairsWithYoungestBar) {
  PersistencePath p;
  auto ev = [](double s, int dim, Effect e, std::string key) {
    CrossingEvent c;
    c.s = s;
    c.cell_dim = dim;
    c.effect = e;
    c.piece = std::move(key);
    c.key = c.piece;
    return c;
  };
  p.crossings = {ev(0.1, 0, Effect::Create, "a"), ev(0.2, 0, Effect::Create, "b"), ev(0.3, 1, Effect::Kill, "c")};
  const Barcode b = compute_barcode(p);
  ASSERT_EQ(b.count(0), 2);
  EXPECT_EQ(b.infinite_count(0), 1);
  for (const auto& bar : b.bars(0))
    if (!bar.infinite()) EXPECT_EQ(bar.birth_key, "b");
  EXPECT_EQ(pbn_along_path(b, 0.15, 0.25, 0), 1);
  EXPECT_EQ(pbn_along_path(b, 0.25, 0.25, 0), 2);
  p.crossings.push_back(ev(0.4, 1, Effect::Kill, "d"));
  p.crossings.push_back(ev(0.5, 1, Effect::Kill, "e"));
  EXPECT_THROW(compute_barcode(p), Error);
}

TEST(Barcodes, EquivalenceIgnoresLengths) {
  Barcode a, b;
  a.dims = {{Bar{0.1, std::nullopt, "x", ""}, Bar{0.2, 0.3, "y", "z"}}};
  b.dims = {{Bar{0.2, std::nullopt, "x", ""}, Bar{0.5, 0.9, "y", "z"}}};
  EXPECT_TRUE(barcodes_equivalent(a, b));
  b.dims[0][1].death.reset();
  EXPECT_FALSE(barcodes_equivalent(a, b));
  EXPECT_EQ(equivalence_classes(std::vector<Barcode>{a, b, a}), (std::vector<std::vector<size_t>>{{0, 2}, {1}}));
}

TEST(Morse, ConleyAndInequalities) {
  const PoincarePolynomial sphere({1, 0, 1});
  const auto ok = morse_conley({1, 0, 1}, sphere);
  EXPECT_TRUE(ok.ok);
  EXPECT_TRUE(ok.Q.empty());
  const auto extra = morse_conley({2, 2, 2}, sphere);
  EXPECT_TRUE(extra.ok);
  EXPECT_EQ(extra.Q, (std::vector<int>{1, 1}));
  EXPECT_FALSE(morse_conley({1, 1, 1}, sphere).ok);
  const auto ineq = inequalities({2, 2, 2}, sphere, 2);
  EXPECT_TRUE(ineq.euler);
  for (bool w : ineq.weak) EXPECT_TRUE(w);
  EXPECT_FALSE(inequalities({0, 0, 1}, sphere, 2).weak[0]);
}

TEST(Morse, RepPathsAreValidReports) {
  const Loaded s("cupped-sphere");
  for (const auto& p : rep_family(s.arr, s.lab).paths) {
    const auto r = morse_report(p, *s.d.total_poly, s.d.n);
    EXPECT_TRUE(r.valid()) << format_report(r);
    EXPECT_EQ(r.chi, 2);
  }
}
