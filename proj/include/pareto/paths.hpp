#pragma once

#include "pareto/labeling.hpp"

#include <random>
#include <string>
#include <vector>

namespace pareto {

struct CrossingEvent {
  double s = 0.0;     // normalized arc length along the path
  std::string key;    // Pareto key
  std::string piece;  // edge piece key
  int edge = -1;
  int cell_dim = 0;
  Effect effect = Effect::Create;
  std::string pairs_with;
  Monomial delta;
  Vec2 point;
};

struct PersistencePath {
  std::vector<Vec2> waypoints;
  std::vector<Vec2> realization;  // monotone polyline, frame corner to frame corner
  std::vector<CrossingEvent> crossings;
  double length = 0.0;

  // Point of the realization at normalized arc length s.
  Vec2 point_at(double s) const;
  std::vector<std::string> key_sequence() const;
};

struct PathOptions {
  double delta_rel = 1e-6;  // minimum distance from vertices, relative to the frame diagonal
  double snap_rel = 1e-7;   // waypoint-to-arc snapping distance
};

// Transverse crossings of an arbitrary monotone polyline with the Pareto
// edges, ordered by arc length. Throws Order for a non-monotone polyline and
// Genericity for overlaps or crossings within delta of a vertex.
std::vector<CrossingEvent> trace_crossings(const Arrangement& arr, const RegionLabeling& lab,
                                           const std::vector<Vec2>& polyline,
                                           const PathOptions& opt = {});

// A path from its realization; the polyline must run from the lower-left to
// the upper-right frame corner. Waypoints are the crossing points.
PersistencePath path_from_realization(const Arrangement& arr, const RegionLabeling& lab,
                                      std::vector<Vec2> polyline, const PathOptions& opt = {});

// Routes a monotone path through the given waypoints, one per crossing.
PersistencePath make_path(const Arrangement& arr, const RegionLabeling& lab,
                          const std::vector<Vec2>& waypoints, const PathOptions& opt = {});

struct PathFamily {
  std::vector<PersistencePath> paths;
  bool truncated = false;
};

// Paths through candidate points on every Pareto arc (midpoints, points near
// both ends, intersections with axis lines through other arcs' endpoints, and
// one point per edge stretch between consecutive vertex coordinates), one per
// distinct crossing sequence.
PathFamily rep_family(const Arrangement& arr, const RegionLabeling& lab, size_t max_paths = 10000,
                      const PathOptions& opt = {});

// Random monotone polyline from `from` to `to` with `steps` segments whose
// increments follow a Dirichlet(alpha) split of the total displacement.
std::vector<Vec2> random_monotone_polyline(Vec2 from, Vec2 to, int steps, std::mt19937_64& rng,
                                           double alpha = 0.5);

// A random persistence path; retries polylines that cross near a vertex.
PersistencePath random_path(const Arrangement& arr, const RegionLabeling& lab, std::mt19937_64& rng,
                            int max_steps = 10, const PathOptions& opt = {});

}  // namespace pareto
