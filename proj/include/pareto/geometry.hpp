#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace pareto {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 normalized(Vec2 a) {
  const double n = norm(a);
  return {a.x / n, a.y / n};
}
// Counter-clockwise perpendicular.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

// The coordinatewise partial order (a,b) <= (a',b').
inline bool poset_leq(Vec2 a, Vec2 b) { return a.x <= b.x && a.y <= b.y; }

struct Frame {
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;

  Vec2 lower_left() const { return {x0, y0}; }
  Vec2 upper_right() const { return {x1, y1}; }
  double diagonal() const { return std::hypot(x1 - x0, y1 - y0); }
  bool strictly_contains(Vec2 p) const { return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1; }
};

// The single tolerance layer. Every geometric comparison in the library goes
// through this struct; `eps` is relative and is scaled by the frame diagonal.
struct Tolerance {
  double eps = 1e-9;
  double scale = 1.0;

  static Tolerance for_frame(const Frame& frame, double eps = default_eps());
  // Honors the PARETO_EPS environment variable.
  static double default_eps();

  double abs() const { return eps * scale; }
  bool is_zero(double v) const { return std::abs(v) <= abs(); }
  bool same_point(Vec2 a, Vec2 b) const { return dist(a, b) <= abs(); }
  // Sign with a dead zone around zero: -1, 0 or +1.
  int sign(double v) const { return is_zero(v) ? 0 : (v > 0 ? 1 : -1); }
};

struct Segment {
  Vec2 a, b;
};

struct SegmentHit {
  double t = 0.0;  // parameter on the first segment
  double u = 0.0;  // parameter on the second segment
  Vec2 point;
  double sin_angle = 0.0;  // |sin| of the crossing angle
};

// Intersection of two non-parallel segments, parameters in [0,1] widened by
// `slack` (a parameter-space tolerance). Returns false for parallel segments.
bool intersect_segments(const Segment& s, const Segment& r, double slack, SegmentHit& hit);

// True when the segments are parallel and overlap in more than a point.
bool collinear_overlap(const Segment& s, const Segment& r, const Tolerance& tol);

double point_segment_distance(Vec2 p, const Segment& s);
double polyline_length(std::span<const Vec2> pts);
double signed_area(std::span<const Vec2> ring);
// Even-odd test against a closed ring (first point need not be repeated).
bool point_in_ring(Vec2 p, std::span<const Vec2> ring);

// Point at arc-length `s` (absolute) along a polyline.
Vec2 point_at_length(std::span<const Vec2> pts, double s);

// Uniform bucket grid over a frame for segment queries.
class SegmentGrid {
 public:
  struct Entry {
    int owner = 0;    // caller-defined id (edge index)
    int segment = 0;  // index of the segment within the owner
    Segment seg;
  };

  SegmentGrid() = default;
  SegmentGrid(const Frame& frame, int cells_per_side);

  void insert(const Entry& e);
  // Candidate entries whose bucket overlaps the bounding box of `q`; may
  // contain duplicates removed by the caller via `visit`.
  template <class F>
  void visit(const Segment& q, F&& f) const;

 private:
  void cell_range(const Segment& s, int& i0, int& i1, int& j0, int& j1) const;

  Frame frame_;
  int n_ = 1;
  double cw_ = 1.0, ch_ = 1.0;
  std::vector<std::vector<int>> buckets_;
  std::vector<Entry> entries_;
};

template <class F>
void SegmentGrid::visit(const Segment& q, F&& f) const {
  int i0, i1, j0, j1;
  cell_range(q, i0, i1, j0, j1);
  std::vector<int> ids;
  for (int j = j0; j <= j1; ++j)
    for (int i = i0; i <= i1; ++i) {
      const auto& b = buckets_[static_cast<size_t>(j * n_ + i)];
      ids.insert(ids.end(), b.begin(), b.end());
    }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) f(entries_[static_cast<size_t>(id)]);
}

}  // namespace pareto
