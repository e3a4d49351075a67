#include "pareto/barcodes.hpp"
#include "pareto/generators.hpp"
#include "pareto/morse.hpp"
#include "pareto/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace pareto;

namespace {

struct Fixture {
  std::string name;
  SingularValueDiagram d;
  Arrangement arr;
  RegionLabeling lab;
  PathFamily fam;
  std::vector<Barcode> rep_barcodes;
};

Fixture load(const std::string& name) {
  Fixture f{name, example_by_name(name), {}, {}, {}, {}};
  f.arr = build_arrangement(f.d);
  f.lab = propagate_labels(f.arr, f.d);
  f.fam = rep_family(f.arr, f.lab);
  for (const auto& p : f.fam.paths) f.rep_barcodes.push_back(compute_barcode(p));
  return f;
}

const PoincarePolynomial& top_label(const Fixture& f) {
  return f.lab.labels[static_cast<size_t>(f.arr.top_face())];
}

std::set<std::string> label_set(const RegionLabeling& lab) {
  std::set<std::string> out;
  for (const auto& p : lab.labels) out.insert(p.to_string());
  return out;
}

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::ostream&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++failures;
  std::printf("%s  %-34s %6.2fs  %s\n", ok ? "PASS" : "FAIL", name.c_str(), secs, detail.str().c_str());
  std::fflush(stdout);
}

std::vector<Fixture>& fixtures() {
  static std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    for (const auto& n : example_names()) v.push_back(load(n));
    return v;
  }();
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw std::runtime_error("no fixture " + name);
}

// Random point of the frame away from every edge, located in its face.
std::pair<Vec2, int> random_located(const Arrangement& arr, std::mt19937_64& rng, Vec2 lo, Vec2 hi) {
  const double margin = 1e-4 * arr.frame.diagonal();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
    const Vec2 p{ux(rng), uy(rng)};
    if (arr.distance_to_edges(p, margin) < margin) continue;
    try {
      return {p, arr.locate(p)};
    } catch (const Error&) {
    }
  }
  throw std::runtime_error("no locatable point");
}

}  // namespace

int main() {
  std::mt19937_64 rng(20241015);

  criterion("calibration-oracle-equivalence", [](std::ostream& out) {
    const RotationalSpec spec{{1.0, 3.0}, {0, 2}, 2, 256};
    const auto d = gen_rotational(spec);
    const auto arr = build_arrangement(d);
    const auto lab = propagate_labels(arr, d);
    const auto model = rotational_model(spec);
    const auto orc = region_polynomials(model, arr);
    int mismatches = 0;
    for (size_t f = 0; f < orc.size(); ++f) mismatches += orc[f] == lab.labels[f] ? 0 : 1;
    const bool total = d.total_poly && d.total_poly->to_string() == "1+t+t^2+t^3" &&
                       lab.labels[static_cast<size_t>(arr.top_face())] == *d.total_poly;
    out << arr.faces.size() << " faces, " << mismatches << " mismatches, " << model.size() << " cells";
    return mismatches == 0 && total;
  });

  criterion("cupped-sphere", [](std::ostream& out) {
    const auto& f = fixture("cupped-sphere");
    const std::set<std::string> want{"0", "1", "2", "1+t", "1+t^2"};
    const bool labels = label_set(f.lab) == want;
    bool green = false, orange = false;
    for (size_t k = 0; k < f.fam.paths.size(); ++k) {
      const auto& b = f.rep_barcodes[k];
      const size_t n = f.fam.paths[k].crossings.size();
      if (n == 2 && b.count(0) == 1 && b.count(1) == 0 && b.count(2) == 1 && b.infinite_count(0) == 1 &&
          b.infinite_count(2) == 1)
        green = true;
      if (n == 6 && b.count(0) == 2 && b.count(1) == 1 && b.count(2) == 1 && b.infinite_count(0) == 1 &&
          b.infinite_count(1) == 0 && b.infinite_count(2) == 1)
        orange = true;
    }
    out << "labels " << (labels ? "exact" : "differ") << ", 2-crossing class " << (green ? "found" : "missing")
        << ", 6-crossing class " << (orange ? "found" : "missing");
    return labels && green && orange;
  });

  criterion("klein-bottle", [](std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto f = load("klein");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto labels = label_set(f.lab);
    bool contains = true;
    for (const char* l : {"0", "1", "1+t", "2+t", "1+2t", "1+3t", "1+4t"}) contains = contains && labels.count(l);
    const bool top = top_label(f).to_string() == "1+2t+t^2";
    int chi_bad = 0;
    for (const auto& p : f.fam.paths) {
      const auto r = morse_report(p, top_label(f), f.d.n);
      if (r.chi != 0 || r.chi_handles != 0) ++chi_bad;
    }
    out << f.fam.paths.size() << " rep paths, chi!=0 on " << chi_bad << ", pipeline " << secs << "s";
    return contains && top && chi_bad == 0 && !f.fam.paths.empty() && secs < 5.0;
  });

  criterion("morse-conley-suite", [](std::ostream& out) {
    int paths = 0, bad = 0;
    for (const auto& f : fixtures()) {
      for (const auto& p : f.fam.paths) {
        ++paths;
        const auto r = morse_report(p, top_label(f), f.d.n);
        bool q_nonneg = r.conley.ok;
        for (int q : r.conley.Q) q_nonneg = q_nonneg && q >= 0;
        if (!(q_nonneg && r.valid())) ++bad;
      }
    }
    const auto& cup = fixture("cupped-sphere");
    bool green = false, orange = false;
    for (const auto& p : cup.fam.paths) {
      const auto r = morse_report(p, top_label(cup), cup.d.n);
      if (r.c == std::vector<int>{1, 0, 1} && r.conley.Q.empty()) green = true;
      if (r.c == std::vector<int>{2, 2, 2} && r.conley.Q == std::vector<int>{1, 1}) orange = true;
    }
    out << paths << " rep paths over " << fixtures().size() << " fixtures, " << bad
        << " invalid; green c=(1,0,1) Q=0 " << (green ? "ok" : "missing") << ", orange c=(2,2,2) Q=1+t "
        << (orange ? "ok" : "missing");
    return bad == 0 && green && orange;
  });

  criterion("path-independence", [&rng](std::ostream& out) {
    int total = 0, failed = 0;
    for (const auto& f : fixtures()) {
      const Vec2 lo = f.arr.frame.lower_left(), hi = f.arr.frame.upper_right();
      for (int k = 0; k < 100; ++k) {
        const auto [p, fp] = random_located(f.arr, rng, lo, hi);
        const auto [q, fq] = random_located(f.arr, rng, p, hi);
        std::uniform_int_distribution<int> steps(1, 8);
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
          const auto poly = random_monotone_polyline(p, q, steps(rng), rng);
          std::vector<CrossingEvent> events;
          try {
            events = trace_crossings(f.arr, f.lab, poly);
          } catch (const Error& e) {
            if (e.code() == ErrorCode::Genericity) continue;
            throw;
          }
          done = true;
          ++total;
          try {
            PoincarePolynomial acc = f.lab.labels[static_cast<size_t>(fp)];
            for (const auto& e : events) acc = poly_apply_delta(acc, e.cell_dim, e.effect);
            if (!(acc == f.lab.labels[static_cast<size_t>(fq)])) ++failed;
          } catch (const Error&) {
            ++failed;
          }
        }
      }
    }
    out << total << " routed paths across " << fixtures().size() << " fixtures, " << failed << " failures";
    return failed == 0 && total == 100 * static_cast<int>(fixtures().size());
  });

  criterion("rep-exhaustiveness", [&rng](std::ostream& out) {
    int total = 0, violations = 0;
    std::ostringstream where;
    for (const auto& f : fixtures()) {
      for (int k = 0; k < 200; ++k) {
        const auto p = random_path(f.arr, f.lab, rng);
        const auto b = compute_barcode(p);
        ++total;
        bool found = false;
        for (const auto& r : f.rep_barcodes) found = found || barcodes_equivalent(b, r);
        if (!found) {
          if (violations == 0) where << "; first in " << f.name;
          ++violations;
        }
      }
    }
    out << total << " random paths, " << violations << " outside rep(f)" << where.str();
    return violations == 0;
  });

  criterion("cyclic-fixture", [](std::ostream& out) {
    const auto& f = fixture("cyclic-solid-torus");
    int ones = 0;
    for (const auto& pa : f.arr.pareto)
      if (pa.kind == ParetoKind::Corner && pa.cell_dim == 1) ++ones;
    // The two (1,1) folds cross: a vertex joins their edges.
    bool crossing = false;
    for (size_t v = 0; v < f.arr.vertices.size() && !crossing; ++v) {
      std::set<std::string> keys;
      for (const auto& e : f.arr.edges)
        if (!e.is_frame() && (e.v0 == static_cast<int>(v) || e.v1 == static_cast<int>(v))) keys.insert(e.key);
      crossing = keys.count("c:lips-a-lower:0") && keys.count("c:lips-b-lower:0");
    }
    int bad = 0;
    for (const auto& p : f.fam.paths)
      if (!morse_report(p, top_label(f), f.d.n).valid()) ++bad;
    out << f.fam.paths.size() << " rep paths (truncated=" << f.fam.truncated << "), " << bad
        << " invalid reports, (1,1) folds cross: " << (crossing ? "yes" : "no");
    return !f.fam.paths.empty() && !f.fam.truncated && bad == 0 && crossing && ones >= 2;
  });

  criterion("pbn-cross-check", [&rng](std::ostream& out) {
    const RotationalSpec spec{{1.0, 3.0}, {0, 2}, 2, 256};
    const auto d = gen_rotational(spec);
    const auto arr = build_arrangement(d);
    const auto lab = propagate_labels(arr, d);
    const auto fam = rep_family(arr, lab);
    const auto model = rotational_model(spec);
    // Probes stay clear of the edges by more than the model's sampling pitch.
    const double clearance = 0.25;
    int probes = 0, mismatches = 0;
    const size_t npaths = std::min<size_t>(5, fam.paths.size());
    for (size_t k = 0; k < npaths; ++k) {
      const auto& path = fam.paths[k * fam.paths.size() / npaths];
      const auto bc = compute_barcode(path);
      std::uniform_real_distribution<double> us(0.0, 1.0);
      std::uniform_int_distribution<int> uq(0, d.n);
      auto clear_s = [&]() {
        for (;;) {
          const double s = us(rng);
          if (arr.distance_to_edges(path.point_at(s), clearance) > clearance) return s;
        }
      };
      for (int j = 0; j < 50; ++j) {
        double s1 = clear_s(), s2 = clear_s();
        if (s1 > s2) std::swap(s1, s2);
        const int q = uq(rng);
        ++probes;
        if (pbn_along_path(bc, s1, s2, q) != pbn_oracle(model, path.point_at(s1), path.point_at(s2), q)) ++mismatches;
      }
    }
    out << probes << " probes on " << npaths << " rep paths, " << mismatches << " mismatches";
    return probes == 250 && mismatches == 0;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
