#include "pareto/arrangement.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pareto {
namespace {

struct Curve {
  std::vector<Vec2> pts;
  int pareto = -1;  // -1 for the frame
  bool closed = false;
  std::string key;

  size_t nseg() const { return pts.size() - 1; }
};

struct Incidence {
  int curve = 0;
  double pos = 0.0;  // segment index + parameter
  int node = 0;
};

struct RawPoint {
  Vec2 p;
  int curve_a, curve_b;
  double pos_a, pos_b;
  double sin_angle;
};

// Crossing angles below this are treated as tangencies.
constexpr double kMinSinAngle = 1e-6;

struct Bbox {
  double x0, y0, x1, y1;
  bool overlaps(const Bbox& o, double pad) const {
    return x0 <= o.x1 + pad && o.x0 <= x1 + pad && y0 <= o.y1 + pad && o.y0 <= y1 + pad;
  }
};

Bbox bbox_of(Vec2 a, Vec2 b) {
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y)};
}

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  size_t find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

std::string describe(const Curve& c) { return c.pareto < 0 ? std::string(kFrameKey) : c.key; }

// Points on face boundary rings crossed by the horizontal line at y.
void scan_crossings(const std::vector<Vec2>& ring, double y, std::vector<double>& xs) {
  const size_t n = ring.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = ring[i], b = ring[j];
    if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
  }
}

double ring_distance(const std::vector<Vec2>& ring, Vec2 p) {
  double best = INFINITY;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) best = std::min(best, point_segment_distance(p, {ring[i], ring[(i + 1) % n]}));
  return best;
}

Vec2 face_sample(const ArrFace& f) {
  double y0 = INFINITY, y1 = -INFINITY;
  for (Vec2 p : f.outer) {
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  constexpr int kLevels = 32;
  Vec2 best{};
  double best_clear = -1.0;
  for (int m = 0; m < kLevels; ++m) {
    const double y = y0 + (y1 - y0) * (m + 0.5 + 0.0173 * std::sqrt(2.0)) / (kLevels + 0.5);
    std::vector<double> xs;
    scan_crossings(f.outer, y, xs);
    for (const auto& h : f.holes) scan_crossings(h, y, xs);
    std::sort(xs.begin(), xs.end());
    for (size_t k = 0; k + 1 < xs.size(); k += 2) {
      const Vec2 c{0.5 * (xs[k] + xs[k + 1]), y};
      double clear = ring_distance(f.outer, c);
      for (const auto& h : f.holes) clear = std::min(clear, ring_distance(h, c));
      if (clear > best_clear) {
        best_clear = clear;
        best = c;
      }
    }
  }
  if (best_clear < 0.0) throw Error(ErrorCode::Degeneracy, "face without interior sample");
  return best;
}

}  // namespace

Arrangement build_arrangement(const std::vector<ParetoArc>& pareto, const Frame& frame,
                              const Tolerance& tol) {
  Arrangement arr;
  arr.frame = frame;
  arr.tol = tol;
  arr.pareto = pareto;

  std::vector<Curve> curves;
  curves.push_back({{frame.lower_left(), {frame.x1, frame.y0}, frame.upper_right(), {frame.x0, frame.y1},
                     frame.lower_left()},
                    -1, true, kFrameKey});
  for (size_t k = 0; k < pareto.size(); ++k) {
    if (pareto[k].geometry.size() < 2) throw Error(ErrorCode::Geometry, "empty Pareto arc " + pareto[k].key);
    curves.push_back({pareto[k].geometry, static_cast<int>(k), false, pareto[k].key});
  }

  // Raw incidences: curve endpoints, frame corners and pairwise crossings.
  std::vector<RawPoint> raw;
  std::vector<std::pair<int, double>> raw_owner;  // incidences not produced by a crossing
  for (size_t c = 0; c < curves.size(); ++c) {
    const Curve& cv = curves[c];
    if (cv.closed) {
      for (size_t v = 0; v < cv.nseg(); ++v) raw.push_back({cv.pts[v], int(c), int(c), double(v), double(v), 1.0});
    } else {
      raw.push_back({cv.pts.front(), int(c), int(c), 0.0, 0.0, 1.0});
      raw.push_back({cv.pts.back(), int(c), int(c), double(cv.nseg()), double(cv.nseg()), 1.0});
    }
  }
  const double pad = tol.abs();
  std::vector<std::vector<Bbox>> boxes(curves.size());
  std::vector<Bbox> curve_box(curves.size());
  for (size_t c = 0; c < curves.size(); ++c) {
    Bbox all{INFINITY, INFINITY, -INFINITY, -INFINITY};
    for (size_t s = 0; s < curves[c].nseg(); ++s) {
      const Bbox b = bbox_of(curves[c].pts[s], curves[c].pts[s + 1]);
      boxes[c].push_back(b);
      all = {std::min(all.x0, b.x0), std::min(all.y0, b.y0), std::max(all.x1, b.x1), std::max(all.y1, b.y1)};
    }
    curve_box[c] = all;
  }
  for (size_t a = 0; a < curves.size(); ++a) {
    for (size_t b = a + 1; b < curves.size(); ++b) {
      if (!curve_box[a].overlaps(curve_box[b], pad)) continue;
      for (size_t sa = 0; sa < curves[a].nseg(); ++sa) {
        for (size_t sb = 0; sb < curves[b].nseg(); ++sb) {
          if (!boxes[a][sa].overlaps(boxes[b][sb], pad)) continue;
          const Segment s{curves[a].pts[sa], curves[a].pts[sa + 1]};
          const Segment r{curves[b].pts[sb], curves[b].pts[sb + 1]};
          if (collinear_overlap(s, r, tol))
            throw Error(ErrorCode::Degeneracy,
                        "overlapping arcs " + describe(curves[a]) + " and " + describe(curves[b]));
          SegmentHit hit;
          const double slack = 1e-12;
          if (!intersect_segments(s, r, slack, hit)) continue;
          raw.push_back({hit.point, int(a), int(b), sa + std::clamp(hit.t, 0.0, 1.0),
                         sb + std::clamp(hit.u, 0.0, 1.0), hit.sin_angle});
        }
      }
    }
  }

  // Merge raw points into nodes.
  std::vector<size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return raw[i].p.x < raw[j].p.x; });
  UnionFind uf(raw.size());
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t k = i + 1; k < order.size() && raw[order[k]].p.x - raw[order[i]].p.x <= pad; ++k)
      if (dist(raw[order[i]].p, raw[order[k]].p) <= pad) uf.unite(order[i], order[k]);
  }
  std::map<size_t, int> node_of_root;
  std::vector<int> node_of(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    const size_t r = uf.find(i);
    auto [it, fresh] = node_of_root.try_emplace(r, static_cast<int>(arr.vertices.size()));
    if (fresh) arr.vertices.push_back(raw[r].p);
    node_of[i] = it->second;
  }

  // Classify nodes and collect incidences per curve.
  std::vector<std::vector<Incidence>> along(curves.size());
  std::vector<std::map<int, std::vector<double>>> node_curves(arr.vertices.size());
  std::vector<double> node_min_sin(arr.vertices.size(), 1.0);
  for (size_t i = 0; i < raw.size(); ++i) {
    const int n = node_of[i];
    along[raw[i].curve_a].push_back({raw[i].curve_a, raw[i].pos_a, n});
    node_curves[n][raw[i].curve_a].push_back(raw[i].pos_a);
    if (raw[i].curve_b != raw[i].curve_a) {
      along[raw[i].curve_b].push_back({raw[i].curve_b, raw[i].pos_b, n});
      node_curves[n][raw[i].curve_b].push_back(raw[i].pos_b);
      node_min_sin[n] = std::min(node_min_sin[n], raw[i].sin_angle);
    }
  }
  auto is_end = [&](int c, double pos) {
    const Curve& cv = curves[static_cast<size_t>(c)];
    if (cv.closed) return false;
    return pos <= 1e-9 || pos >= static_cast<double>(cv.nseg()) - 1e-9;
  };
  for (size_t n = 0; n < arr.vertices.size(); ++n) {
    const auto& inc = node_curves[n];
    std::vector<int> ends, interior;
    for (const auto& [c, poss] : inc) {
      bool end = false;
      for (double p : poss) end = end || is_end(c, p);
      (end ? ends : interior).push_back(c);
    }
    std::ostringstream where;
    where << " at (" << arr.vertices[n].x << ", " << arr.vertices[n].y << ")";
    auto names = [&]() {
      std::string s;
      for (const auto& [c, poss] : inc) s += (s.empty() ? "" : ", ") + describe(curves[static_cast<size_t>(c)]);
      return s;
    };
    if (inc.size() >= 3) throw Error(ErrorCode::Degeneracy, "triple point of " + names() + where.str());
    if (inc.size() == 1 && ends.size() == 1)
      throw Error(ErrorCode::Degeneracy, "dangling end of " + names() + where.str());
    if (inc.size() == 2 && ends.size() == 1) {
      const int other = interior.front();
      if (curves[static_cast<size_t>(other)].pareto >= 0)
        throw Error(ErrorCode::Degeneracy, "T-junction of " + names() + where.str());
    }
    if (inc.size() == 2 && interior.size() == 2 && node_min_sin[n] < kMinSinAngle)
      throw Error(ErrorCode::Degeneracy, "tangential intersection of " + names() + where.str());
  }

  // Split curves into edges.
  for (size_t c = 0; c < curves.size(); ++c) {
    auto& inc = along[c];
    std::sort(inc.begin(), inc.end(), [](const Incidence& a, const Incidence& b) { return a.pos < b.pos; });
    std::vector<Incidence> cuts;
    for (const auto& i : inc)
      if (cuts.empty() || cuts.back().node != i.node) cuts.push_back(i);
    const Curve& cv = curves[c];
    if (cv.closed) {
      Incidence wrap = cuts.front();
      wrap.pos += static_cast<double>(cv.nseg());
      if (cuts.back().node != wrap.node) cuts.push_back(wrap);
      else cuts.back().pos = wrap.pos;
    }
    int piece = 0;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      ArrEdge e;
      e.v0 = cuts[k].node;
      e.v1 = cuts[k + 1].node;
      e.key = cv.key;
      e.pareto = cv.pareto;
      e.piece = piece++;
      e.points.push_back(arr.vertices[static_cast<size_t>(e.v0)]);
      const double lo = cuts[k].pos, hi = cuts[k + 1].pos;
      for (auto v = static_cast<long>(std::floor(lo)) + 1; static_cast<double>(v) < hi - 1e-9; ++v) {
        if (static_cast<double>(v) <= lo + 1e-9) continue;
        e.points.push_back(cv.pts[static_cast<size_t>(v) % cv.nseg()]);
      }
      e.points.push_back(arr.vertices[static_cast<size_t>(e.v1)]);
      if (e.v0 == e.v1 && e.points.size() < 3) continue;
      arr.edges.push_back(std::move(e));
    }
  }

  // Half-edge structure: outgoing half-edges sorted counter-clockwise per vertex.
  const size_t nh = 2 * arr.edges.size();
  std::vector<int> origin(nh);
  std::vector<double> angle(nh);
  std::vector<std::vector<int>> outgoing(arr.vertices.size());
  for (size_t e = 0; e < arr.edges.size(); ++e) {
    const auto& pts = arr.edges[e].points;
    origin[2 * e] = arr.edges[e].v0;
    origin[2 * e + 1] = arr.edges[e].v1;
    const Vec2 df = pts[1] - pts[0];
    const Vec2 db = pts[pts.size() - 2] - pts.back();
    angle[2 * e] = std::atan2(df.y, df.x);
    angle[2 * e + 1] = std::atan2(db.y, db.x);
    outgoing[static_cast<size_t>(origin[2 * e])].push_back(static_cast<int>(2 * e));
    outgoing[static_cast<size_t>(origin[2 * e + 1])].push_back(static_cast<int>(2 * e + 1));
  }
  std::vector<int> pos_in_vertex(nh);
  for (auto& out : outgoing) {
    std::sort(out.begin(), out.end(), [&](int a, int b) { return angle[size_t(a)] < angle[size_t(b)]; });
    for (size_t k = 0; k < out.size(); ++k) pos_in_vertex[static_cast<size_t>(out[k])] = static_cast<int>(k);
  }
  auto twin = [](int h) { return h ^ 1; };
  auto next = [&](int h) {
    const int t = twin(h);
    const auto& out = outgoing[static_cast<size_t>(origin[static_cast<size_t>(t)])];
    const int k = pos_in_vertex[static_cast<size_t>(t)];
    return out[static_cast<size_t>((k + static_cast<int>(out.size()) - 1) % static_cast<int>(out.size()))];
  };
  auto halfedge_points = [&](int h, std::vector<Vec2>& ring) {
    const auto& pts = arr.edges[static_cast<size_t>(h / 2)].points;
    if (h % 2 == 0) ring.insert(ring.end(), pts.begin(), pts.end() - 1);
    else ring.insert(ring.end(), pts.rbegin(), pts.rend() - 1);
  };

  // Trace cycles.
  std::vector<int> cycle_of(nh, -1);
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<Vec2>> rings;
  std::vector<double> areas;
  for (size_t h0 = 0; h0 < nh; ++h0) {
    if (cycle_of[h0] >= 0) continue;
    std::vector<int> cyc;
    int h = static_cast<int>(h0);
    const int id = static_cast<int>(cycles.size());
    while (cycle_of[static_cast<size_t>(h)] < 0) {
      cycle_of[static_cast<size_t>(h)] = id;
      cyc.push_back(h);
      h = next(h);
    }
    std::vector<Vec2> ring;
    for (int x : cyc) halfedge_points(x, ring);
    areas.push_back(signed_area(ring));
    cycles.push_back(std::move(cyc));
    rings.push_back(std::move(ring));
  }
  for (size_t e = 0; e < arr.edges.size(); ++e)
    if (cycle_of[2 * e] == cycle_of[2 * e + 1])
      throw Error(ErrorCode::Degeneracy, "dangling edge on " + arr.edges[e].key);

  // Connected components of the edge graph.
  UnionFind comp(arr.vertices.size());
  for (const auto& e : arr.edges) comp.unite(static_cast<size_t>(e.v0), static_cast<size_t>(e.v1));
  std::set<size_t> roots;
  for (const auto& e : arr.edges) roots.insert(comp.find(static_cast<size_t>(e.v0)));
  arr.components = static_cast<int>(roots.size());
  auto component_of_cycle = [&](size_t c) {
    return comp.find(static_cast<size_t>(origin[static_cast<size_t>(cycles[c].front())]));
  };
  const size_t frame_root = comp.find(static_cast<size_t>(arr.edges.front().v0));

  // Positive cycles bound faces; negative cycles are outer boundaries.
  std::vector<int> face_of_cycle(cycles.size(), -1);
  std::vector<size_t> positive;
  for (size_t c = 0; c < cycles.size(); ++c)
    if (areas[c] > 0.0) positive.push_back(c);
  std::vector<ArrFace> faces(positive.size());
  for (size_t k = 0; k < positive.size(); ++k) {
    face_of_cycle[positive[k]] = static_cast<int>(k);
    faces[k].outer = rings[positive[k]];
    faces[k].cycles.push_back(cycles[positive[k]]);
  }
  for (size_t c = 0; c < cycles.size(); ++c) {
    if (areas[c] > 0.0) continue;
    const size_t root = component_of_cycle(c);
    if (root == frame_root) continue;  // outer face
    const Vec2 probe = rings[c].front();
    int host = -1;
    double host_area = INFINITY;
    for (size_t k = 0; k < positive.size(); ++k) {
      if (component_of_cycle(positive[k]) == root) continue;
      if (areas[positive[k]] < host_area && point_in_ring(probe, faces[k].outer)) {
        host = static_cast<int>(k);
        host_area = areas[positive[k]];
      }
    }
    if (host < 0) throw Error(ErrorCode::Degeneracy, "component outside the frame");
    face_of_cycle[c] = host;
    faces[static_cast<size_t>(host)].holes.push_back(rings[c]);
    faces[static_cast<size_t>(host)].cycles.push_back(cycles[c]);
  }
  for (auto& f : faces) f.sample = face_sample(f);

  // Deterministic face order by sample point.
  std::vector<size_t> forder(faces.size());
  std::iota(forder.begin(), forder.end(), 0);
  std::sort(forder.begin(), forder.end(), [&](size_t a, size_t b) {
    const Vec2 pa = faces[a].sample, pb = faces[b].sample;
    return pa.y != pb.y ? pa.y < pb.y : pa.x < pb.x;
  });
  std::vector<int> rank(faces.size());
  for (size_t k = 0; k < forder.size(); ++k) rank[forder[k]] = static_cast<int>(k);
  for (size_t k = 0; k < forder.size(); ++k) arr.faces.push_back(std::move(faces[forder[k]]));

  arr.halfedge_face_.assign(nh, -1);
  for (size_t h = 0; h < nh; ++h) {
    const int f = face_of_cycle[static_cast<size_t>(cycle_of[h])];
    arr.halfedge_face_[h] = f < 0 ? -1 : rank[static_cast<size_t>(f)];
  }

  arr.grid_ = SegmentGrid(frame, 64);
  for (size_t e = 0; e < arr.edges.size(); ++e) {
    auto& edge = arr.edges[e];
    const int left = arr.halfedge_face_[2 * e], right = arr.halfedge_face_[2 * e + 1];
    if (edge.is_frame()) {
      edge.lower = left;
      edge.upper = -1;
    } else {
      const Vec2 d = edge.points[1] - edge.points[0];
      const ParetoArc& pa = arr.pareto[static_cast<size_t>(edge.pareto)];
      Vec2 u = pa.kind == ParetoKind::Corner ? perp(normalized(d)) : pa.sweep_at(0);
      if (pa.kind == ParetoKind::Corner && u.x < 0.0) u = -u;
      const bool left_is_upper = dot(perp(d), u) > 0.0;
      edge.upper = left_is_upper ? left : right;
      edge.lower = left_is_upper ? right : left;
      if (edge.lower < 0 || edge.upper < 0)
        throw Error(ErrorCode::Degeneracy, "Pareto edge on the outer face: " + edge.key);
    }
    for (size_t s = 0; s + 1 < edge.points.size(); ++s)
      arr.grid_.insert({static_cast<int>(e), static_cast<int>(s), {edge.points[s], edge.points[s + 1]}});
  }
  return arr;
}

Arrangement build_arrangement(const SingularValueDiagram& d) {
  return build_arrangement(compute_critical_set(d), d.frame, Tolerance::for_frame(d.frame));
}

bool Arrangement::in_face(const ArrFace& f, Vec2 p) const {
  if (!point_in_ring(p, f.outer)) return false;
  for (const auto& h : f.holes)
    if (point_in_ring(p, h)) return false;
  return true;
}

double Arrangement::distance_to_edges(Vec2 p, double r) const {
  double best = INFINITY;
  const Segment box{{p.x - r, p.y - r}, {p.x + r, p.y + r}};
  grid_.visit(box, [&](const SegmentGrid::Entry& e) { best = std::min(best, point_segment_distance(p, e.seg)); });
  return best;
}

double Arrangement::nearest_vertex_distance(Vec2 p) const {
  double best = INFINITY;
  for (Vec2 v : vertices) best = std::min(best, dist(p, v));
  return best;
}

int Arrangement::locate(Vec2 p) const {
  if (!frame.strictly_contains(p)) throw Error(ErrorCode::InvalidInput, "point outside the frame");
  if (distance_to_edges(p, tol.abs() * 2.0) <= tol.abs())
    throw Error(ErrorCode::AmbiguousLocation, "point lies on an edge");
  for (size_t f = 0; f < faces.size(); ++f)
    if (in_face(faces[f], p)) return static_cast<int>(f);
  throw Error(ErrorCode::AmbiguousLocation, "point not inside any face");
}

int Arrangement::bottom_face() const {
  const double off = 1e-7 * frame.diagonal();
  return locate(frame.lower_left() + Vec2{off, off});
}

int Arrangement::top_face() const {
  const double off = 1e-7 * frame.diagonal();
  return locate(frame.upper_right() - Vec2{off, off});
}

bool Arrangement::euler_ok() const {
  const long v = static_cast<long>(vertices.size()), e = static_cast<long>(edges.size());
  const long f = static_cast<long>(faces.size()) + 1;
  return v - e + f == 1 + components;
}

}  // namespace pareto
