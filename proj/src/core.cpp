#include "pareto/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pareto {

TransverseIndex canonical_index(Vec2 v, int i, int j) {
  if (i < 0 || j < 0) throw Error(ErrorCode::InvalidInput, "index counts must be non-negative");
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::InvalidInput, "index vector is zero");
  // Vectors already of unit length keep their bits, so the map is idempotent.
  const Vec2 u = std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon() ? v : Vec2{v.x / n, v.y / n};
  const bool flip = u.y < 0.0 || (u.y == 0.0 && u.x < 0.0);
  if (flip) return {{-u.x, -u.y == 0.0 ? 0.0 : -u.y}, j, i};
  return {u, i, j};
}

std::pair<int, int> index_along(const TransverseIndex& index, Vec2 direction) {
  const double d = dot(index.v, direction);
  if (std::abs(d) <= 1e-12 * norm(index.v) * norm(direction))
    throw Error(ErrorCode::Geometry, "index vector is not transverse to the sweep direction");
  return d > 0.0 ? std::pair{index.i, index.j} : std::pair{index.j, index.i};
}

PoincarePolynomial::PoincarePolynomial(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  for (int c : coeffs_)
    if (c < 0) throw Error(ErrorCode::InvalidInput, "negative Betti number");
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int PoincarePolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

int PoincarePolynomial::euler_characteristic() const {
  int chi = 0;
  for (size_t k = 0; k < coeffs_.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * coeffs_[k];
  return chi;
}

std::string PoincarePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const int c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (k == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << 't';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

std::string_view to_string(Effect e) { return e == Effect::Create ? "create" : "kill"; }

Effect effect_from_string(std::string_view s) {
  if (s == "create") return Effect::Create;
  if (s == "kill") return Effect::Kill;
  throw Error(ErrorCode::InvalidInput, "unknown effect '" + std::string(s) + "'");
}

PoincarePolynomial poly_apply_delta(const PoincarePolynomial& p, int k, Effect effect) {
  std::vector<int> c = p.coeffs();
  if (effect == Effect::Create) {
    if (k < 0) throw Error(ErrorCode::InvalidInput, "negative handle index");
    if (c.size() <= static_cast<size_t>(k)) c.resize(static_cast<size_t>(k) + 1, 0);
    c[static_cast<size_t>(k)] += 1;
    return PoincarePolynomial(std::move(c));
  }
  if (k < 1 || p.coeff(k - 1) < 1) {
    std::ostringstream msg;
    msg << "kill by a " << k << "-handle needs a degree-" << (k - 1) << " generator in "
        << p.to_string();
    throw Error(ErrorCode::Inconsistency, msg.str());
  }
  c[static_cast<size_t>(k - 1)] -= 1;
  return PoincarePolynomial(std::move(c));
}

PoincarePolynomial poly_unapply_delta(const PoincarePolynomial& p, int k, Effect effect) {
  std::vector<int> c = p.coeffs();
  const int deg = effect == Effect::Create ? k : k - 1;
  if (deg < 0) throw Error(ErrorCode::InvalidInput, "negative handle index");
  if (effect == Effect::Create) {
    if (p.coeff(deg) < 1)
      throw Error(ErrorCode::Inconsistency, "cannot undo a create on " + p.to_string());
    c[static_cast<size_t>(deg)] -= 1;
  } else {
    if (c.size() <= static_cast<size_t>(deg)) c.resize(static_cast<size_t>(deg) + 1, 0);
    c[static_cast<size_t>(deg)] += 1;
  }
  return PoincarePolynomial(std::move(c));
}

Monomial delta_of(int cell_dim, Effect effect) {
  return effect == Effect::Create ? Monomial{1, cell_dim} : Monomial{-1, cell_dim - 1};
}

int FoldArc::side() const {
  if (points.size() < 2) return 1;
  return cross(points[1] - points[0], index.v) >= 0.0 ? 1 : -1;
}

Vec2 FoldArc::side_normal(size_t k) const {
  const Vec2 d = normalized(points[k + 1] - points[k]);
  const Vec2 left = perp(d);
  return side() > 0 ? left : -left;
}

const FoldArc* SingularValueDiagram::find_arc(const std::string& id) const {
  for (const auto& a : arcs)
    if (a.id == id) return &a;
  return nullptr;
}

const Cusp* SingularValueDiagram::find_cusp(const std::string& id) const {
  for (const auto& c : cusps)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<Tangency> axis_tangencies(const FoldArc& arc) {
  std::vector<Tangency> out;
  const auto& p = arc.points;
  if (p.size() < 3) return out;
  const size_t nseg = p.size() - 1;
  auto sgn = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  auto visit = [&](size_t vertex, size_t in, size_t out_seg) {
    const Vec2 a = p[in + 1] - p[in];
    const Vec2 b = p[out_seg + 1] - p[out_seg];
    if (sgn(a.x) != sgn(b.x) && sgn(a.x) != 0 && sgn(b.x) != 0)
      out.push_back({vertex, p[vertex], TangencyAxis::Vertical, a.x < 0});
    if (sgn(a.y) != sgn(b.y) && sgn(a.y) != 0 && sgn(b.y) != 0)
      out.push_back({vertex, p[vertex], TangencyAxis::Horizontal, a.y < 0});
  };
  if (arc.closed()) {
    for (size_t v = 0; v < nseg; ++v) visit(v, (v + nseg - 1) % nseg, v);
    std::stable_sort(out.begin(), out.end(),
                     [](const Tangency& x, const Tangency& y) { return x.vertex < y.vertex; });
  } else {
    for (size_t v = 1; v < nseg; ++v) visit(v, v - 1, v);
  }
  return out;
}

}  // namespace pareto
