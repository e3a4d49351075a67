#include "pareto/generators.hpp"
#include "pareto/arrangement.hpp"

#include <cmath>
#include <numbers>

namespace pareto {
namespace {

std::string circle_id(size_t k) { return "circle" + std::to_string(k); }

}  // namespace

std::vector<Vec2> circle_polyline(Vec2 center, double radius, int vertices) {
  if (vertices < 8 || vertices % 8 != 0)
    throw Error(ErrorCode::InvalidInput, "circle vertex count must be a positive multiple of 8");
  const int quarter = vertices / 4;
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(vertices) + 1);
  for (int k = 0; k <= vertices; ++k) {
    const int m = (k + vertices / 8) % vertices;
    Vec2 unit;
    if (m % quarter == 0) {
      static constexpr Vec2 axes[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      unit = axes[m / quarter];
    } else {
      const double a = 2.0 * std::numbers::pi * m / vertices;
      unit = {std::cos(a), std::sin(a)};
    }
    pts.push_back(center + radius * unit);
  }
  pts.back() = pts.front();
  return pts;
}

void assign_fishtail_effects(SingularValueDiagram& d) {
  const auto pareto = compute_critical_set(d);
  const Arrangement arr = build_arrangement(pareto, d.frame, Tolerance::for_frame(d.frame));
  for (const auto& arc : d.arcs) {
    if (!arc.closed()) continue;
    const ParetoArc* vray = nullptr;
    const ParetoArc* hray = nullptr;
    for (const auto& pa : pareto) {
      if (pa.source.rfind(arc.id + "@", 0) != 0 || pa.kiss != Kiss::Interior) continue;
      (pa.kind == ParetoKind::TailVertical ? vray : hray) = &pa;
    }
    Vec2 fishtail{INFINITY, INFINITY};
    if (vray && hray) fishtail = {vray->geometry[0].x, hray->geometry[0].y};
    for (const auto& pa : pareto) {
      const bool mine = pa.source == arc.id || pa.source.rfind(arc.id + "@", 0) == 0;
      if (!mine || d.effects.count(pa.key)) continue;
      if (pa.kiss != Kiss::Interior) {
        d.effects[pa.key] = {Effect::Create, {}};
        continue;
      }
      const Vec2 base = pa.geometry[0];
      const double reach = dist(base, fishtail);
      for (const auto& e : arr.edges) {
        if (e.key != pa.key) continue;
        const double far = std::max(dist(base, e.points.front()), dist(base, e.points.back()));
        const bool before = far <= reach + arr.tol.abs() * 10.0;
        d.effects[e.piece_key()] = {before ? Effect::Kill : Effect::Create, {}};
      }
    }
  }
}

SingularValueDiagram gen_rotational(const RotationalSpec& spec) {
  if (spec.radii.size() != spec.indices.size())
    throw Error(ErrorCode::InvalidInput, "radii and indices differ in length");
  if (spec.fiber_dim < 1) throw Error(ErrorCode::InvalidInput, "fiber dimension must be positive");
  SingularValueDiagram d;
  d.n = spec.fiber_dim + 1;
  double rmax = 1.0;
  for (double r : spec.radii) {
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidInput, "radii must be positive");
    rmax = std::max(rmax, r);
  }
  const double half = 1.25 * rmax;
  d.frame = {-half, -half, half, half};

  std::vector<int> pg(static_cast<size_t>(spec.fiber_dim) + 1, 0);
  for (size_t k = 0; k < spec.radii.size(); ++k) {
    const int ik = spec.indices[k];
    if (ik < 0 || ik > spec.fiber_dim) throw Error(ErrorCode::InvalidInput, "index outside [0, fiber_dim]");
    FoldArc arc;
    arc.id = circle_id(k);
    arc.points = circle_polyline({0, 0}, spec.radii[k], spec.vertices);
    arc.index = canonical_index(normalized(arc.points.front()), spec.fiber_dim - ik, ik);
    d.arcs.push_back(std::move(arc));
    pg[static_cast<size_t>(ik)] += 1;
  }
  // P(S^1 x N) = (1 + t) P(N)
  std::vector<int> total(pg.size() + 1, 0);
  for (size_t k = 0; k < pg.size(); ++k) {
    total[k] += pg[k];
    total[k + 1] += pg[k];
  }
  d.total_poly = PoincarePolynomial(total);
  if (!d.arcs.empty()) assign_fishtail_effects(d);
  return d;
}

SingularValueDiagram gen_sphere_projection() {
  SingularValueDiagram d;
  d.n = 2;
  d.frame = {-1.6, -1.6, 1.6, 1.6};
  FoldArc equator;
  equator.id = "equator";
  equator.points = circle_polyline({0, 0}, 1.0, 256);
  equator.index = canonical_index(normalized(equator.points.front()), 0, 1);
  d.arcs.push_back(std::move(equator));
  d.total_poly = PoincarePolynomial({1, 0, 1});
  assign_fishtail_effects(d);
  return d;
}

namespace {

// A lips singularity: two folds joined at cusps along `axis`, both descending
// when the axis has negative slope. The lower fold carries `lower`, the upper
// fold the index with i one smaller.
void add_eye(SingularValueDiagram& d, const std::string& id, Vec2 center, Vec2 axis, double len, int lower_i) {
  axis = normalized(axis);
  Vec2 normal = perp(axis);
  if (normal.x + normal.y < 0.0) normal = -normal;
  const double width = 0.1 * len;
  constexpr int kSamples = 48;
  FoldArc lower, upper;
  lower.id = id + "-lower";
  upper.id = id + "-upper";
  for (int k = 0; k <= kSamples; ++k) {
    const double s = -len * std::cos(std::numbers::pi * k / kSamples);
    const double q = std::max(0.0, 1.0 - (s / len) * (s / len));
    const double h = width * q * std::sqrt(q);
    const Vec2 mid = center + s * axis;
    lower.points.push_back(mid - h * normal);
    upper.points.push_back(mid + h * normal);
  }
  lower.points.back() = upper.points.back() = center + len * axis;
  lower.points.front() = upper.points.front() = center - len * axis;
  const int m = d.n - 1;
  lower.index = canonical_index(normal, lower_i, m - lower_i);
  upper.index = canonical_index(normal, lower_i - 1, m - lower_i + 1);
  const std::string a = id + "-cusp-a", b = id + "-cusp-b";
  lower.endpoints = {Endpoint{a}, Endpoint{b}};
  upper.endpoints = lower.endpoints;
  d.cusps.push_back({a, lower.points.front(), {lower.id, upper.id}, axis});
  d.cusps.push_back({b, lower.points.back(), {lower.id, upper.id}, axis});
  d.effects["c:" + lower.id + ":0"] = {Effect::Create, {}};
  d.effects["c:" + upper.id + ":0"] = {Effect::Kill, {}};
  d.arcs.push_back(std::move(lower));
  d.arcs.push_back(std::move(upper));
}

}  // namespace

SingularValueDiagram gen_cupped_sphere() {
  SingularValueDiagram d = gen_sphere_projection();
  d.effects.clear();
  // Axis along the anti-diagonal so both folds descend everywhere.
  add_eye(d, "eye", {-0.3, -0.3}, {1.0, -1.0}, 0.25, 1);
  assign_fishtail_effects(d);
  return d;
}

double klein_radius(double theta, double p) {
  constexpr double c1 = 1.0, c2 = 2.0, amp = 0.1, waves = 8.0, width = 0.4, center = 0.1;
  const double pi = std::numbers::pi;
  const double u = std::remainder(theta - center, 2.0 * pi);
  const double bump = -c2 * amp * std::exp(-(u / width) * (u / width)) * std::cos(waves * u);
  return c1 + (c2 - c1 + bump) * 0.5 * (1.0 - std::cos(p));
}

SingularValueDiagram gen_klein() {
  SingularValueDiagram d;
  d.n = 2;
  d.frame = {-2.75, -2.75, 2.75, 2.75};
  constexpr int kVertices = 1024;
  constexpr double kSeam = 2.3;
  for (int w = 0; w < 2; ++w) {
    FoldArc arc;
    arc.id = w == 0 ? "fold-min" : "fold-max";
    const double p = w == 0 ? 0.0 : std::numbers::pi;
    for (int i = 0; i <= kVertices; ++i) {
      const double t = 2.0 * std::numbers::pi * (i % kVertices) / kVertices + kSeam;
      const double r = klein_radius(t, p);
      arc.points.push_back({r * std::cos(t), r * std::sin(t)});
    }
    arc.index = canonical_index(normalized(arc.points.front()), 1 - w, w);
    d.arcs.push_back(std::move(arc));
  }
  d.total_poly = PoincarePolynomial({1, 2, 1});
  static const std::pair<const char*, Effect> kEffects[] = {
      {"c:fold-max:0", Effect::Create},   {"c:fold-max:1", Effect::Create},   {"c:fold-max:2", Effect::Create},
      {"c:fold-min:0", Effect::Create},   {"c:fold-min:1", Effect::Create},   {"h:fold-max:0#0", Effect::Create},
      {"h:fold-max:1#0", Effect::Kill},   {"h:fold-max:1#1", Effect::Kill},   {"h:fold-max:1#2", Effect::Kill},
      {"h:fold-max:1#3", Effect::Kill},   {"h:fold-max:1#4", Effect::Create}, {"h:fold-min:0#0", Effect::Create},
      {"h:fold-min:1#0", Effect::Kill},   {"h:fold-min:1#1", Effect::Create}, {"h:fold-min:1#2", Effect::Create},
      {"h:fold-min:1#3", Effect::Create}, {"h:fold-min:1#4", Effect::Create}, {"h:fold-min:1#5", Effect::Create},
      {"v:fold-max:0#0", Effect::Create}, {"v:fold-max:1#0", Effect::Kill},   {"v:fold-max:1#1", Effect::Kill},
      {"v:fold-max:1#2", Effect::Create}, {"v:fold-max:2#0", Effect::Create}, {"v:fold-max:2#1", Effect::Create},
      {"v:fold-max:2#2", Effect::Create}, {"v:fold-max:2#3", Effect::Create}, {"v:fold-max:3#0", Effect::Kill},
      {"v:fold-max:3#1", Effect::Kill},   {"v:fold-max:3#2", Effect::Kill},   {"v:fold-min:0#0", Effect::Create},
      {"v:fold-min:1#0", Effect::Kill},   {"v:fold-min:1#1", Effect::Create}, {"v:fold-min:1#2", Effect::Create},
      {"v:fold-min:1#3", Effect::Create},
  };
  for (const auto& [key, effect] : kEffects) d.effects[key] = {effect, {}};
  return d;
}

SingularValueDiagram gen_cyclic_solid_torus() {
  // The doubled solid torus S^1 x S^2 with two lips of index (1,1) / (0,2)
  // crossing each other, so each (1,1) fold lies partly above the other.
  SingularValueDiagram d = gen_rotational({{1.0, 3.0}, {0, 2}, 2, 256});
  d.effects.clear();
  add_eye(d, "lips-a", {-1.45, -1.35}, {std::cos(-0.45), std::sin(-0.45)}, 0.5, 1);
  add_eye(d, "lips-b", {-1.4, -1.45}, {std::cos(-1.15), std::sin(-1.15)}, 0.5, 1);
  assign_fishtail_effects(d);
  return d;
}

std::vector<std::string> example_names() {
  return {"rotational", "sphere", "cupped-sphere", "klein", "cyclic-solid-torus"};
}

SingularValueDiagram example_by_name(std::string_view name) {
  if (name == "rotational") return gen_rotational({{1.0, 3.0}, {0, 2}, 2, 256});
  if (name == "sphere") return gen_sphere_projection();
  if (name == "cupped-sphere") return gen_cupped_sphere();
  if (name == "klein") return gen_klein();
  if (name == "cyclic-solid-torus") return gen_cyclic_solid_torus();
  throw Error(ErrorCode::InvalidInput, "unknown example '" + std::string(name) + "'");
}

}  // namespace pareto
