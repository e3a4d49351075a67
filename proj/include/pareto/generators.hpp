#pragma once

#include "pareto/core.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pareto {

// f(z, p) = z * g(p) on S^1 x N: concentric fold circles, one per critical
// value c_k of g, with fold index (r, m - I_k, I_k).
struct RotationalSpec {
  std::vector<double> radii;  // 0 < c_1 < ... < c_k
  std::vector<int> indices;   // Morse index of g at each critical value
  int fiber_dim = 2;          // dim N; the diagram has n = fiber_dim + 1
  int vertices = 256;         // polyline vertices per circle, divisible by 8
};

SingularValueDiagram gen_rotational(const RotationalSpec& spec);
// Orthogonal projection of the round sphere to a plane: one fold circle.
SingularValueDiagram gen_sphere_projection();
SingularValueDiagram gen_cupped_sphere();
// Klein bottle K = [0, 2pi] x S^1 / (0, p) ~ (2pi, -p) mapped by
// f(theta, p) = klein_radius(theta, p) (cos theta, sin theta). The radius is
// even in p, so f is well defined; its folds are p = 0 (round, radius 1) and
// p = pi (radius 2 with two bumps on the right).
double klein_radius(double theta, double p);
SingularValueDiagram gen_klein();
SingularValueDiagram gen_cyclic_solid_torus();

std::vector<std::string> example_names();
// Throws InvalidInput for an unknown name.
SingularValueDiagram example_by_name(std::string_view name);

// Polyline circle, counter-clockwise, exact vertices on the axes and the seam
// at 45 degrees. `vertices` must be divisible by 8.
std::vector<Vec2> circle_polyline(Vec2 center, double radius, int vertices);

// Effects for circle-type folds: corner arcs and exterior rays create; an
// interior ray kills up to the crossing with its partner ray and creates
// beyond it. Written per edge piece.
void assign_fishtail_effects(SingularValueDiagram& d);

}  // namespace pareto
