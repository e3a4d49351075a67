#pragma once

#include "pareto/error.hpp"
#include "pareto/geometry.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pareto {

// Oriented signature index (v, i, j) of a fold, with (v,i,j) ~ (-v,j,i).
struct TransverseIndex {
  Vec2 v{1.0, 0.0};
  int i = 0;
  int j = 0;

  friend bool operator==(const TransverseIndex&, const TransverseIndex&) = default;
};

// Canonical representative: v in the closed upper half-plane, horizontal v
// pointing to +x. Throws InvalidInput for a zero vector or negative counts.
TransverseIndex canonical_index(Vec2 v, int i, int j);

// The (i, j) pair read with v aligned to `direction` (positive dot product).
// Geometry error when v is orthogonal to `direction`.
std::pair<int, int> index_along(const TransverseIndex& index, Vec2 direction);

// Betti numbers of a space over Z/2; coefficient k holds beta_k.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<int> coeffs);

  const std::vector<int>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int coeff(int k) const;
  bool is_zero() const { return coeffs_.empty(); }
  int euler_characteristic() const;

  // Renders as "1+2t+t^2"; the zero polynomial renders as "0".
  std::string to_string() const;

  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
  friend auto operator<=>(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  std::vector<int> coeffs_;
};

enum class Effect { Create, Kill };

std::string_view to_string(Effect e);
Effect effect_from_string(std::string_view s);

// A create/kill annotation. `pairs_with` optionally names the crossing key
// whose bar a kill closes, overriding the youngest-bar rule.
struct EffectSpec {
  Effect effect = Effect::Create;
  std::string pairs_with;

  friend bool operator==(const EffectSpec&, const EffectSpec&) = default;
};

using EffectMap = std::map<std::string, EffectSpec>;

// create: +t^k ; kill: -t^(k-1). Kill on a zero coefficient throws Inconsistency.
PoincarePolynomial poly_apply_delta(const PoincarePolynomial& p, int k, Effect effect);
// Inverse of poly_apply_delta; throws Inconsistency if the result would be negative.
PoincarePolynomial poly_unapply_delta(const PoincarePolynomial& p, int k, Effect effect);

// A signed monomial +-t^degree.
struct Monomial {
  int sign = 1;
  int degree = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial delta_of(int cell_dim, Effect effect);

struct Endpoint {
  // Empty cusp id means a free endpoint.
  std::string cusp;
  bool is_free() const { return cusp.empty(); }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct FoldArc {
  std::string id;
  std::vector<Vec2> points;
  TransverseIndex index;
  std::array<Endpoint, 2> endpoints;

  bool closed() const { return points.size() > 2 && points.front() == points.back(); }
  // Unit normal on the side named by `index.v`, for segment `k`.
  Vec2 side_normal(size_t k) const;
  // +1 when index.v lies to the left of the first segment, -1 otherwise.
  int side() const;
};

struct Cusp {
  std::string id;
  Vec2 point;
  std::array<std::string, 2> arcs;
  Vec2 tangent;
};

struct SingularValueDiagram {
  int n = 2;
  Frame frame;
  std::vector<FoldArc> arcs;
  std::vector<Cusp> cusps;
  std::optional<PoincarePolynomial> total_poly;
  EffectMap effects;
  std::string field = "Z/2";

  const FoldArc* find_arc(const std::string& id) const;
  const Cusp* find_cusp(const std::string& id) const;
};

enum class TangencyAxis { Vertical, Horizontal };

// An interior polyline vertex where x (Vertical) or y (Horizontal) attains a
// local extremum. `is_min` is true for a local minimum of that coordinate.
struct Tangency {
  size_t vertex = 0;
  Vec2 point;
  TangencyAxis axis = TangencyAxis::Vertical;
  bool is_min = false;
};

// Axis tangencies of an arc in traversal order. Closed arcs are treated
// cyclically; the endpoints of open arcs are never tangencies.
std::vector<Tangency> axis_tangencies(const FoldArc& arc);

struct Violation {
  std::string rule;     // short tag, e.g. "index sum"
  std::string message;  // human-readable detail
};

// Checks the genericity and well-formedness rules; never throws.
std::vector<Violation> validate_diagram(const SingularValueDiagram& d);

// Throws InvalidInput listing every violation when the report is non-empty.
void require_valid(const SingularValueDiagram& d);

}  // namespace pareto
