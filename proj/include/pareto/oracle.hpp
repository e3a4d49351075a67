#pragma once

#include "pareto/arrangement.hpp"
#include "pareto/generators.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pareto {

// A finite cell complex with Z/2 incidences and a sampled map on its vertices.
class SampledModel {
 public:
  std::string name;

  int add_vertex(Vec2 value);
  int add_cell(int dim, std::vector<int> boundary);

  size_t size() const { return dim_.size(); }
  int dim(int cell) const { return dim_[static_cast<size_t>(cell)]; }
  int top_dim() const;
  const std::vector<int>& boundary(int cell) const { return boundary_[static_cast<size_t>(cell)]; }
  // The sampled value at a vertex; for higher cells the coordinatewise max
  // over its vertices, so a cell lies in the sublevel set iff value <= (a, b).
  Vec2 value(int cell) const { return value_[static_cast<size_t>(cell)]; }

  // True when the boundary of every boundary vanishes over Z/2.
  bool boundary_squared_zero() const;

 private:
  std::vector<int> dim_;
  std::vector<std::vector<int>> boundary_;
  std::vector<Vec2> value_;
};

// Cells whose vertices all satisfy value <= ab, ordered by (dim, id).
std::vector<int> sublevel_complex(const SampledModel& model, Vec2 ab);

// Z/2 Betti numbers of a subcomplex given as cell ids closed under faces.
PoincarePolynomial betti(const SampledModel& model, const std::vector<int>& cells);

std::vector<PoincarePolynomial> region_polynomials(const SampledModel& model, const Arrangement& arr);

// Rank of H_q(M_lo) -> H_q(M_hi). Throws Order unless lo <= hi.
int pbn_oracle(const SampledModel& model, Vec2 lo, Vec2 hi, int q);

// Product of two complexes; `value` maps a pair of vertex ids to the sample.
SampledModel product_model(const SampledModel& a, const SampledModel& b,
                           const std::function<Vec2(int, int)>& value);

// Small reference complexes for tests.
SampledModel octahedron_model();
SampledModel klein_square_model();

// Latitude-longitude sphere S^2 (rings x longitudes plus two poles), or a
// polygon S^1, with vertex values given by `value(x, y, z)`.
SampledModel sphere_model(int rings, int longitudes,
                          const std::function<Vec2(double, double, double)>& value);
SampledModel circle_model(int vertices, const std::function<Vec2(double, double)>& value);

// The round sphere under orthogonal projection to the (x, y) plane.
SampledModel sphere_projection_model(int rings = 31, int longitudes = 64);

// S^1 x S^m with f = g(p) (cos t, sin t), g a height function on S^m whose two
// critical values are spec.radii (index 0 then index m). m is 1 or 2.
SampledModel rotational_model(const RotationalSpec& spec, int theta_steps = 96, int rings = 15,
                              int longitudes = 32);

// Square grid on the Klein bottle [0, 2pi) x [0, 2pi) with (2pi, p) ~ (0, -p);
// `value(theta, p)` gives the vertex samples.
SampledModel klein_bottle_model(int theta_steps, int p_steps, const std::function<Vec2(double, double)>& value);

// The Klein bottle map behind gen_klein().
SampledModel klein_projection_model(int theta_steps = 4096, int p_steps = 32);

}  // namespace pareto
