#include "pareto/paths.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace pareto {
namespace {

constexpr double kSlack = 1e-9;

std::string fmt(Vec2 p) {
  std::ostringstream o;
  o << '(' << p.x << ", " << p.y << ')';
  return o.str();
}

// No Pareto edge touches the segment.
bool segment_clear(const Arrangement& arr, const Segment& s) {
  if (dist(s.a, s.b) == 0.0) return true;
  bool clear = true;
  arr.visit_edge_segments(s, [&](const SegmentGrid::Entry& e) {
    if (!clear || arr.edges[static_cast<size_t>(e.owner)].is_frame()) return;
    SegmentHit hit;
    if (collinear_overlap(s, e.seg, arr.tol) || intersect_segments(s, e.seg, kSlack, hit)) clear = false;
  });
  return clear;
}

bool polyline_clear(const Arrangement& arr, const std::vector<Vec2>& pts) {
  for (size_t k = 0; k + 1 < pts.size(); ++k)
    if (!segment_clear(arr, {pts[k], pts[k + 1]})) return false;
  return true;
}

bool located_in(const Arrangement& arr, Vec2 p, int face) {
  try {
    return arr.locate(p) == face;
  } catch (const Error&) {
    return false;
  }
}

// Upward unit direction across a Pareto edge at the given segment.
Vec2 edge_sweep(const Arrangement& arr, const ArrEdge& e, size_t seg) {
  const ParetoArc& pa = arr.pareto[static_cast<size_t>(e.pareto)];
  if (pa.kind != ParetoKind::Corner) return pa.sweep_at(0);
  Vec2 n = perp(normalized(e.points[seg + 1] - e.points[seg]));
  return n.x < 0.0 ? -n : n;
}

struct OnEdge {
  int edge = -1;
  Vec2 point;
  Vec2 sweep;
};

std::optional<OnEdge> snap_to_edge(const Arrangement& arr, Vec2 p, double radius) {
  std::optional<OnEdge> best;
  double best_d = radius;
  const Segment box{p - Vec2{radius, radius}, p + Vec2{radius, radius}};
  arr.visit_edge_segments(box, [&](const SegmentGrid::Entry& e) {
    const ArrEdge& edge = arr.edges[static_cast<size_t>(e.owner)];
    if (edge.is_frame()) return;
    const double d = point_segment_distance(p, e.seg);
    if (d > best_d) return;
    const Vec2 v = e.seg.b - e.seg.a;
    const double t = std::clamp(dot(p - e.seg.a, v) / dot(v, v), 0.0, 1.0);
    best_d = d;
    best = OnEdge{e.owner, e.seg.a + t * v, edge_sweep(arr, edge, static_cast<size_t>(e.segment))};
  });
  return best;
}

bool leq(Vec2 a, Vec2 b) { return a.x <= b.x && a.y <= b.y; }

std::optional<std::vector<Vec2>> lattice_route(const Arrangement& arr, Vec2 a, Vec2 b, int n) {
  const Vec2 step{(b.x - a.x) / n, (b.y - a.y) / n};
  auto at = [&](int i, int j) { return a + Vec2{i * step.x, j * step.y}; };
  const size_t w = static_cast<size_t>(n) + 1;
  std::vector<int> from(w * w, -2);  // -2 unreached, -1 root, else parent index
  from[0] = -1;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const size_t id = static_cast<size_t>(i) * w + static_cast<size_t>(j);
      if (from[id] == -2) continue;
      if (i < n && from[id + w] == -2 && segment_clear(arr, {at(i, j), at(i + 1, j)})) from[id + w] = static_cast<int>(id);
      if (j < n && from[id + 1] == -2 && segment_clear(arr, {at(i, j), at(i, j + 1)})) from[id + 1] = static_cast<int>(id);
    }
  if (from[w * w - 1] == -2) return std::nullopt;
  std::vector<Vec2> pts;
  for (int id = static_cast<int>(w * w - 1); id >= 0; id = from[static_cast<size_t>(id)])
    pts.push_back(at(id / static_cast<int>(w), id % static_cast<int>(w)));
  std::reverse(pts.begin(), pts.end());
  // Drop collinear interior points.
  std::vector<Vec2> out{pts.front()};
  for (size_t k = 1; k + 1 < pts.size(); ++k)
    if (std::abs(cross(pts[k] - out.back(), pts[k + 1] - pts[k])) > 0.0) out.push_back(pts[k]);
  out.push_back(pts.back());
  return out;
}

// Monotone connector from a to b inside `face`. `ua`/`ub` are the sweep
// directions of the edges a and b lie on (zero at the frame corners).
std::optional<std::vector<Vec2>> connect(const Arrangement& arr, Vec2 a, Vec2 ua, Vec2 b, Vec2 ub, int face,
                                         const PathOptions& opt, bool allow_lattice = true) {
  if (!leq(a, b)) return std::nullopt;
  const double diag = arr.frame.diagonal();
  const double gap = dist(a, b);
  for (double rel : {1e-3, 1e-4, 1e-5, 0.3 * opt.delta_rel}) {
    const double tau = std::min(rel * diag, 0.25 * gap);
    const Vec2 a1 = a + tau * ua;
    const Vec2 b1 = b - tau * ub;
    if (!leq(a1, b1)) continue;
    if (norm(ua) > 0.0 && !segment_clear(arr, {a + 1e-3 * (a1 - a), a1})) continue;
    if (norm(ub) > 0.0 && !segment_clear(arr, {b1, b - 1e-3 * (b - b1)})) continue;
    const Vec2 probe = norm(ua) > 0.0 ? a1 : (norm(ub) > 0.0 ? b1 : 0.5 * (a + b));
    if (!located_in(arr, probe, face)) continue;
    const std::vector<std::vector<Vec2>> shapes = {
        {a1, {b1.x, a1.y}, b1}, {a1, {a1.x, b1.y}, b1}, {a1, b1}};
    for (const auto& mid : shapes) {
      if (!polyline_clear(arr, mid)) continue;
      std::vector<Vec2> out{a};
      for (Vec2 p : mid)
        if (!(p == out.back())) out.push_back(p);
      if (!(b == out.back())) out.push_back(b);
      return out;
    }
    if (!allow_lattice || a1.x == b1.x || a1.y == b1.y) continue;
    for (int n : {24, 96}) {
      if (auto mid = lattice_route(arr, a1, b1, n)) {
        std::vector<Vec2> out{a};
        for (Vec2 p : *mid)
          if (!(p == out.back())) out.push_back(p);
        if (!(b == out.back())) out.push_back(b);
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Vec2 PersistencePath::point_at(double s) const {
  return point_at_length(realization, std::clamp(s, 0.0, 1.0) * length);
}

std::vector<std::string> PersistencePath::key_sequence() const {
  std::vector<std::string> out;
  for (const auto& c : crossings) out.push_back(c.piece);
  return out;
}

std::vector<CrossingEvent> trace_crossings(const Arrangement& arr, const RegionLabeling& lab,
                                           const std::vector<Vec2>& polyline, const PathOptions& opt) {
  const double tol = arr.tol.abs();
  const double delta = opt.delta_rel * arr.frame.diagonal();
  struct Hit {
    double arclen;
    int edge;
    Vec2 point;
  };
  std::vector<Hit> hits;
  double acc = 0.0;
  for (size_t k = 0; k + 1 < polyline.size(); ++k) {
    const Segment seg{polyline[k], polyline[k + 1]};
    const Vec2 d = seg.b - seg.a;
    if (d.x < -tol || d.y < -tol)
      throw Error(ErrorCode::Order, "path is not monotone at " + fmt(seg.a) + " -> " + fmt(seg.b));
    const double len = norm(d);
    if (len == 0.0) continue;
    arr.visit_edge_segments(seg, [&](const SegmentGrid::Entry& e) {
      const ArrEdge& edge = arr.edges[static_cast<size_t>(e.owner)];
      if (edge.is_frame()) return;
      if (collinear_overlap(seg, e.seg, arr.tol))
        throw Error(ErrorCode::Genericity, "path runs along " + edge.key + " near " + fmt(seg.a));
      SegmentHit hit;
      if (intersect_segments(seg, e.seg, kSlack, hit))
        hits.push_back({acc + std::clamp(hit.t, 0.0, 1.0) * len, e.owner, hit.point});
    });
    acc += len;
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return a.arclen != b.arclen ? a.arclen < b.arclen : a.edge < b.edge;
  });
  std::vector<CrossingEvent> out;
  std::vector<Hit> kept;
  for (const auto& h : hits) {
    bool dup = false;
    for (auto it = kept.rbegin(); it != kept.rend() && h.arclen - it->arclen <= 10.0 * tol; ++it)
      if (it->edge == h.edge) dup = true;
    if (dup) continue;
    kept.push_back(h);
  }
  for (const auto& h : kept) {
    const ArrEdge& edge = arr.edges[static_cast<size_t>(h.edge)];
    if (arr.nearest_vertex_distance(h.point) < delta)
      throw Error(ErrorCode::Genericity, "path crosses " + edge.key + " within delta of a vertex at " + fmt(h.point));
    CrossingEvent ev;
    ev.s = acc > 0.0 ? h.arclen / acc : 0.0;
    ev.key = edge.key;
    ev.piece = edge.piece_key();
    ev.edge = h.edge;
    ev.cell_dim = arr.pareto[static_cast<size_t>(edge.pareto)].cell_dim;
    const auto it = lab.edge_effects.find(ev.piece);
    if (it == lab.edge_effects.end()) throw Error(ErrorCode::IncompleteAnnotation, "no effect for " + ev.piece);
    ev.effect = it->second.effect;
    ev.pairs_with = it->second.pairs_with;
    ev.delta = delta_of(ev.cell_dim, ev.effect);
    ev.point = h.point;
    out.push_back(std::move(ev));
  }
  return out;
}

PersistencePath path_from_realization(const Arrangement& arr, const RegionLabeling& lab, std::vector<Vec2> polyline,
                                      const PathOptions& opt) {
  if (polyline.size() < 2) throw Error(ErrorCode::InvalidInput, "path needs at least two points");
  const double tol = arr.tol.abs();
  if (dist(polyline.front(), arr.frame.lower_left()) > tol || dist(polyline.back(), arr.frame.upper_right()) > tol)
    throw Error(ErrorCode::InvalidInput, "path must run from the lower-left to the upper-right frame corner");
  polyline.front() = arr.frame.lower_left();
  polyline.back() = arr.frame.upper_right();
  PersistencePath path;
  path.crossings = trace_crossings(arr, lab, polyline, opt);
  path.length = polyline_length(polyline);
  path.realization = std::move(polyline);
  for (const auto& c : path.crossings) path.waypoints.push_back(c.point);
  return path;
}

PersistencePath make_path(const Arrangement& arr, const RegionLabeling& lab, const std::vector<Vec2>& waypoints,
                          const PathOptions& opt) {
  const double diag = arr.frame.diagonal();
  const double delta = opt.delta_rel * diag;
  for (size_t k = 1; k < waypoints.size(); ++k)
    if (!leq(waypoints[k - 1], waypoints[k]) || waypoints[k - 1] == waypoints[k])
      throw Error(ErrorCode::Order, "waypoint " + std::to_string(k) + " " + fmt(waypoints[k]) +
                                        " is not above-right of " + fmt(waypoints[k - 1]));
  std::vector<OnEdge> anchors;
  for (size_t k = 0; k < waypoints.size(); ++k) {
    const Vec2 w = waypoints[k];
    auto on = snap_to_edge(arr, w, opt.snap_rel * diag);
    if (!on) throw Error(ErrorCode::InvalidInput, "waypoint " + std::to_string(k) + " " + fmt(w) + " is not on a Pareto arc");
    if (arr.nearest_vertex_distance(on->point) < delta)
      throw Error(ErrorCode::Genericity, "waypoint " + std::to_string(k) + " " + fmt(w) + " is too close to a vertex");
    anchors.push_back(*on);
  }

  std::vector<Vec2> route{arr.frame.lower_left()};
  int face = arr.bottom_face();
  Vec2 here = arr.frame.lower_left(), here_dir{};
  auto leg = [&](Vec2 to, Vec2 to_dir, const std::string& what) {
    auto piece = connect(arr, here, here_dir, to, to_dir, face, opt);
    if (!piece)
      throw Error(ErrorCode::Routing, "no monotone connector inside face " + std::to_string(face) + " from " +
                                          fmt(here) + " to " + what);
    route.insert(route.end(), piece->begin() + 1, piece->end());
  };
  for (size_t k = 0; k < anchors.size(); ++k) {
    const ArrEdge& e = arr.edges[static_cast<size_t>(anchors[k].edge)];
    if (e.lower != face)
      throw Error(ErrorCode::Routing, "waypoint " + std::to_string(k) + " on " + e.key + " does not bound face " +
                                          std::to_string(face) + " from above");
    leg(anchors[k].point, anchors[k].sweep, "waypoint " + std::to_string(k));
    face = e.upper;
    here = anchors[k].point;
    here_dir = anchors[k].sweep;
  }
  if (face != arr.top_face())
    throw Error(ErrorCode::Routing, "path ends in face " + std::to_string(face) + ", not the top face");
  leg(arr.frame.upper_right(), {}, "the upper-right corner");

  PersistencePath path = path_from_realization(arr, lab, route, opt);
  if (path.crossings.size() != anchors.size())
    throw Error(ErrorCode::Routing, "realization crosses " + std::to_string(path.crossings.size()) +
                                        " arcs for " + std::to_string(anchors.size()) + " waypoints");
  for (size_t k = 0; k < anchors.size(); ++k)
    if (path.crossings[k].edge != anchors[k].edge)
      throw Error(ErrorCode::Routing, "realization crosses waypoints out of order");
  path.waypoints.clear();
  for (const auto& a : anchors) path.waypoints.push_back(a.point);
  return path;
}

PathFamily rep_family(const Arrangement& arr, const RegionLabeling& lab, size_t max_paths, const PathOptions& opt) {
  const double diag = arr.frame.diagonal();
  const double delta = opt.delta_rel * diag;

  // Candidate waypoints, grouped by edge.
  std::vector<OnEdge> cand;
  std::vector<std::vector<int>> by_edge(arr.edges.size());
  auto add_on_edge = [&](size_t e, size_t seg, Vec2 q) {
    if (arr.nearest_vertex_distance(q) < 2.0 * delta) return -1;
    for (int c : by_edge[e])
      if (dist(cand[static_cast<size_t>(c)].point, q) < 1e-3 * delta) return c;
    by_edge[e].push_back(static_cast<int>(cand.size()));
    cand.push_back(OnEdge{static_cast<int>(e), q, edge_sweep(arr, arr.edges[e], seg)});
    return static_cast<int>(cand.size()) - 1;
  };
  auto add = [&](size_t p, Vec2 q) {
    double best_d = INFINITY;
    size_t best_e = 0, best_s = 0;
    Vec2 best_q{};
    for (size_t e = 0; e < arr.edges.size(); ++e) {
      const ArrEdge& edge = arr.edges[e];
      if (edge.pareto != static_cast<int>(p)) continue;
      for (size_t s = 0; s + 1 < edge.points.size(); ++s) {
        const Segment seg{edge.points[s], edge.points[s + 1]};
        const double d = point_segment_distance(q, seg);
        if (d < best_d) {
          best_d = d;
          const Vec2 v = seg.b - seg.a;
          const double t = std::clamp(dot(q - seg.a, v) / dot(v, v), 0.0, 1.0);
          best_e = e;
          best_s = s;
          best_q = seg.a + t * v;
        }
      }
    }
    if (best_d <= arr.tol.abs() * 10.0) add_on_edge(best_e, best_s, best_q);
  };
  for (size_t p = 0; p < arr.pareto.size(); ++p) {
    const auto& g = arr.pareto[p].geometry;
    const double len = polyline_length(g);
    const double eps_arc = std::max(delta, 1e-3 * len);
    add(p, point_at_length(g, 0.5 * len));
    add(p, point_at_length(g, eps_arc));
    add(p, point_at_length(g, len - eps_arc));
    for (size_t q = 0; q < arr.pareto.size(); ++q) {
      if (q == p) continue;
      for (Vec2 end : {arr.pareto[q].geometry.front(), arr.pareto[q].geometry.back()}) {
        for (size_t k = 0; k + 1 < g.size(); ++k) {
          const Vec2 a = g[k], b = g[k + 1];
          if ((a.x - end.x) * (b.x - end.x) < 0.0)
            add(p, a + ((end.x - a.x) / (b.x - a.x)) * (b - a));
          if ((a.y - end.y) * (b.y - end.y) < 0.0)
            add(p, a + ((end.y - a.y) / (b.y - a.y)) * (b - a));
        }
      }
    }
  }
  // Reachability of a point on an edge from earlier crossings changes only at
  // vertex coordinates and at the coordinates of those crossings, so one point
  // per stretch of the edge between consecutive such lines is enough.
  std::vector<double> vx, vy;
  for (Vec2 v : arr.vertices) {
    vx.push_back(v.x);
    vy.push_back(v.y);
  }
  std::sort(vx.begin(), vx.end());
  std::sort(vy.begin(), vy.end());
  auto split_edge = [&](size_t e, const std::vector<double>& xs, const std::vector<double>& ys) {
    const ArrEdge& edge = arr.edges[e];
    std::vector<double> cuts{0.0};
    double base = 0.0;
    for (size_t k = 0; k + 1 < edge.points.size(); ++k) {
      const Vec2 a = edge.points[k], b = edge.points[k + 1];
      const double len = dist(a, b);
      auto scan = [&](const std::vector<double>& lines, double u, double w) {
        if (u == w) return;
        auto it = std::upper_bound(lines.begin(), lines.end(), std::min(u, w));
        for (; it != lines.end() && *it < std::max(u, w); ++it) cuts.push_back(base + len * (*it - u) / (w - u));
      };
      scan(xs, a.x, b.x);
      scan(ys, a.y, b.y);
      base += len;
    }
    cuts.push_back(base);
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> out;
    size_t seg = 0;
    double seg_start = 0.0;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (cuts[k + 1] - cuts[k] < 4.0 * delta) continue;
      const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
      while (seg + 2 < edge.points.size() && seg_start + dist(edge.points[seg], edge.points[seg + 1]) < mid) {
        seg_start += dist(edge.points[seg], edge.points[seg + 1]);
        ++seg;
      }
      const Vec2 a = edge.points[seg], b = edge.points[seg + 1];
      const double t = std::clamp((mid - seg_start) / dist(a, b), 0.0, 1.0);
      const int id = add_on_edge(e, seg, a + t * (b - a));
      if (id >= 0) out.push_back(id);
    }
    return out;
  };
  for (size_t e = 0; e < arr.edges.size(); ++e)
    if (!arr.edges[e].is_frame()) split_edge(e, vx, vy);
  const std::vector<std::vector<int>> fixed = by_edge;

  // Depth-first search over edge sequences. Each level keeps every candidate
  // on its edge that some candidate of the previous level reaches inside the
  // face between them; -1 stands for the lower-left corner.
  std::map<std::pair<int, int>, bool> reach_cache;
  auto reaches = [&](int from, int to) {
    const auto key = std::pair{from, to};
    if (auto it = reach_cache.find(key); it != reach_cache.end()) return it->second;
    const Vec2 here = from < 0 ? arr.frame.lower_left() : cand[static_cast<size_t>(from)].point;
    const Vec2 dir = from < 0 ? Vec2{} : cand[static_cast<size_t>(from)].sweep;
    const int face = from < 0 ? arr.bottom_face() : arr.edges[static_cast<size_t>(cand[static_cast<size_t>(from)].edge)].upper;
    const OnEdge& next = cand[static_cast<size_t>(to)];
    const bool ok = leq(here, next.point) && !(here == next.point) &&
                    connect(arr, here, dir, next.point, next.sweep, face, opt, false).has_value();
    reach_cache.emplace(key, ok);
    return ok;
  };
  struct Level {
    std::vector<int> cands, parent;
  };
  std::vector<Level> levels{{{-1}, {-1}}};
  std::vector<std::vector<int>> witnesses;
  PathFamily fam;
  const int top = arr.top_face();
  std::function<void(int)> search = [&](int face) {
    if (fam.truncated) return;
    const Level& cur = levels.back();
    if (face == top) {
      for (size_t i = 0; i < cur.cands.size(); ++i) {
        const int c = cur.cands[i];
        const Vec2 here = c < 0 ? arr.frame.lower_left() : cand[static_cast<size_t>(c)].point;
        const Vec2 dir = c < 0 ? Vec2{} : cand[static_cast<size_t>(c)].sweep;
        if (!connect(arr, here, dir, arr.frame.upper_right(), {}, face, opt)) continue;
        if (witnesses.size() >= max_paths) {
          fam.truncated = true;
          return;
        }
        std::vector<int> w;
        for (size_t lv = levels.size() - 1, k = i; lv > 0; k = static_cast<size_t>(levels[lv].parent[k]), --lv)
          w.push_back(levels[lv].cands[k]);
        std::reverse(w.begin(), w.end());
        witnesses.push_back(std::move(w));
        break;
      }
    }
    std::vector<double> xs = vx, ys = vy;
    for (int c : levels.back().cands) {
      if (c < 0) continue;
      xs.push_back(cand[static_cast<size_t>(c)].point.x);
      ys.push_back(cand[static_cast<size_t>(c)].point.y);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    for (size_t e = 0; e < arr.edges.size(); ++e) {
      const ArrEdge& edge = arr.edges[e];
      if (edge.is_frame() || edge.lower != face) continue;
      std::vector<int> pool = fixed[e];
      for (int c : split_edge(e, xs, ys))
        if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(c);
      Level next;
      for (int c : pool) {
        const Level& prev = levels.back();
        for (size_t i = 0; i < prev.cands.size(); ++i) {
          if (!reaches(prev.cands[i], c)) continue;
          next.cands.push_back(c);
          next.parent.push_back(static_cast<int>(i));
          break;
        }
      }
      if (next.cands.empty()) continue;
      levels.push_back(std::move(next));
      search(edge.upper);
      levels.pop_back();
      if (fam.truncated) return;
    }
  };
  search(arr.bottom_face());

  for (const auto& wit : witnesses) {
    std::vector<Vec2> pts;
    for (int c : wit) pts.push_back(cand[static_cast<size_t>(c)].point);
    fam.paths.push_back(make_path(arr, lab, pts, opt));
  }
  std::stable_sort(fam.paths.begin(), fam.paths.end(), [](const PersistencePath& a, const PersistencePath& b) {
    if (a.crossings.size() != b.crossings.size()) return a.crossings.size() < b.crossings.size();
    return a.key_sequence() < b.key_sequence();
  });
  return fam;
}

std::vector<Vec2> random_monotone_polyline(Vec2 from, Vec2 to, int steps, std::mt19937_64& rng, double alpha) {
  std::gamma_distribution<double> gamma(alpha, 1.0);
  auto split = [&]() {
    std::vector<double> w(static_cast<size_t>(steps));
    double total = 0.0;
    for (auto& x : w) total += (x = gamma(rng) + 1e-12);
    for (auto& x : w) x /= total;
    return w;
  };
  const auto wx = split(), wy = split();
  std::vector<Vec2> out{from};
  Vec2 p = from;
  for (int k = 0; k < steps; ++k) {
    p = p + Vec2{wx[static_cast<size_t>(k)] * (to.x - from.x), wy[static_cast<size_t>(k)] * (to.y - from.y)};
    out.push_back(p);
  }
  out.back() = to;
  return out;
}

PersistencePath random_path(const Arrangement& arr, const RegionLabeling& lab, std::mt19937_64& rng, int max_steps,
                            const PathOptions& opt) {
  std::uniform_int_distribution<int> steps(1, std::max(1, max_steps));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto poly = random_monotone_polyline(arr.frame.lower_left(), arr.frame.upper_right(), steps(rng), rng);
    try {
      return path_from_realization(arr, lab, std::move(poly), opt);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Genericity) throw;
    }
  }
  throw Error(ErrorCode::Routing, "no generic random path after 1000 attempts");
}

}  // namespace pareto
