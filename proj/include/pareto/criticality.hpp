#pragma once

#include "pareto/core.hpp"

#include <string>
#include <vector>

namespace pareto {

// The two switches that fix how an oriented fold index turns into a cell
// dimension. They were calibrated against the sublevel-homology oracle on the
// rotational S^1 x S^2 model and are frozen in `kCalibratedConvention`.
struct IndexConvention {
  // Corner crossing attaches a cell of dimension j, reading the index with v
  // aligned to the crossing direction (false: dimension i).
  bool corner_reads_j = true;
  // Interior kiss adds one to the base dimension, exterior kiss adds none
  // (false: the other way round).
  bool interior_tail_adds_one = true;
};

inline constexpr IndexConvention kCalibratedConvention{true, true};

enum class Monotonicity { Descending, Ascending };

struct MonotoneSegment {
  std::vector<Vec2> points;   // in arc traversal order
  Monotonicity kind = Monotonicity::Ascending;
  Vec2 side_normal;           // unit normal on the index side, first segment
  int ordinal = 0;            // position among the arc's runs
};

struct SplitResult {
  std::vector<MonotoneSegment> segments;
  std::vector<Tangency> tangencies;
};

// Partitions an arc at its axis-tangency vertices. A run is descending when y
// strictly decreases as x increases along it.
SplitResult monotone_split(const FoldArc& arc);

// Dimension of the cell attached when a quadrant corner crosses a descending
// run in the increasing direction.
int corner_cell_dim(const MonotoneSegment& segment, const TransverseIndex& index, int n,
                    IndexConvention convention = kCalibratedConvention);

enum class ParetoKind { Corner, TailVertical, TailHorizontal };
enum class Kiss { None, Exterior, Interior };

std::string_view to_string(ParetoKind k);
std::string_view to_string(Kiss k);

struct ParetoArc {
  std::string key;
  ParetoKind kind = ParetoKind::Corner;
  // Corner: polyline ordered by increasing x. Tail: {base, frame end}.
  std::vector<Vec2> geometry;
  int cell_dim = 0;
  std::string source;
  Kiss kiss = Kiss::None;

  // Crossing direction: the positive normal for corners, +x / +y for rays.
  Vec2 sweep_at(size_t segment) const;
};

std::vector<ParetoArc> tail_rays(const SingularValueDiagram& d, const FoldArc& arc,
                                 const SplitResult& split,
                                 IndexConvention convention = kCalibratedConvention);

// Corner arcs from descending runs plus tail rays, for every arc. Ascending
// runs and cusp points are not critical.
std::vector<ParetoArc> compute_critical_set(const SingularValueDiagram& d,
                                            IndexConvention convention = kCalibratedConvention);

}  // namespace pareto
