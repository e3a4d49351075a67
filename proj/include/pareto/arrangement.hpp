#pragma once

#include "pareto/criticality.hpp"

#include <string>
#include <vector>

namespace pareto {

inline constexpr const char* kFrameKey = "frame";

struct ArrEdge {
  std::vector<Vec2> points;  // from vertex v0 to vertex v1
  int v0 = -1, v1 = -1;
  std::string key;           // Pareto key, or kFrameKey
  int pareto = -1;           // index into Arrangement::pareto, -1 for the frame
  int piece = 0;             // ordinal of this edge along its curve
  // Faces on the lower-left and upper-right sides. Frame edges store the
  // bounded face in `lower` and -1 (outer face) in `upper`.
  int lower = -1, upper = -1;

  bool is_frame() const { return pareto < 0; }
  // The effect key for this piece: "<key>#<piece>".
  std::string piece_key() const { return key + "#" + std::to_string(piece); }
};

struct ArrFace {
  std::vector<Vec2> outer;               // CCW boundary ring
  std::vector<std::vector<Vec2>> holes;  // rings of nested components
  std::vector<std::vector<int>> cycles;  // half-edge ids, outer cycle first
  Vec2 sample;                           // interior point with maximal clearance
};

class Arrangement {
 public:
  Frame frame;
  Tolerance tol;
  std::vector<ParetoArc> pareto;
  std::vector<Vec2> vertices;
  std::vector<ArrEdge> edges;
  std::vector<ArrFace> faces;  // bounded faces only; the outer face is -1
  int components = 0;

  // Half-edge 2e runs v0 -> v1 along edge e, 2e+1 runs back.
  int face_left_of(int halfedge) const { return halfedge_face_[static_cast<size_t>(halfedge)]; }

  // Throws AmbiguousLocation within tolerance of an edge, InvalidInput outside the frame.
  int locate(Vec2 p) const;
  int bottom_face() const;
  int top_face() const;
  // Minimum distance from p to any edge, using the spatial index.
  double distance_to_edges(Vec2 p, double search_radius) const;
  double nearest_vertex_distance(Vec2 p) const;
  // Calls f(SegmentGrid::Entry) for edge segments near the bounding box of q;
  // Entry::owner is the edge id.
  template <class F>
  void visit_edge_segments(const Segment& q, F&& f) const {
    grid_.visit(q, f);
  }
  // Euler characteristic check with the outer face counted: V - E + F == 1 + C.
  bool euler_ok() const;

 private:
  friend Arrangement build_arrangement(const std::vector<ParetoArc>&, const Frame&, const Tolerance&);
  bool in_face(const ArrFace& f, Vec2 p) const;

  std::vector<int> halfedge_face_;
  SegmentGrid grid_;
};

// Planar subdivision of the frame by the Pareto arcs. Throws Degeneracy on
// triple points, tangential crossings, overlaps, T-junctions and dangling ends.
Arrangement build_arrangement(const std::vector<ParetoArc>& pareto, const Frame& frame,
                              const Tolerance& tol);

// Convenience: critical set plus arrangement with the default tolerance.
Arrangement build_arrangement(const SingularValueDiagram& d);

}  // namespace pareto
