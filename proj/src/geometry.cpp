#include "pareto/geometry.hpp"
#include "pareto/error.hpp"

#include <cstdlib>
#include <string>

namespace pareto {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::Geometry: return "geometry";
    case ErrorCode::Degeneracy: return "degeneracy";
    case ErrorCode::AmbiguousLocation: return "ambiguous-location";
    case ErrorCode::IncompleteAnnotation: return "incomplete-annotation";
    case ErrorCode::Inconsistency: return "inconsistency";
    case ErrorCode::Order: return "order";
    case ErrorCode::Routing: return "routing";
    case ErrorCode::Genericity: return "genericity";
    case ErrorCode::CapExceeded: return "cap-exceeded";
  }
  return "unknown";
}

double Tolerance::default_eps() {
  if (const char* env = std::getenv("PARETO_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-9;
}

Tolerance Tolerance::for_frame(const Frame& frame, double eps) {
  return Tolerance{eps, frame.diagonal()};
}

bool intersect_segments(const Segment& s, const Segment& r, double slack, SegmentHit& hit) {
  const Vec2 d1 = s.b - s.a;
  const Vec2 d2 = r.b - r.a;
  const double denom = cross(d1, d2);
  const double l1 = norm(d1), l2 = norm(d2);
  if (l1 == 0.0 || l2 == 0.0) return false;
  const double sin_angle = std::abs(denom) / (l1 * l2);
  if (sin_angle < 1e-14) return false;
  const Vec2 w = r.a - s.a;
  const double t = cross(w, d2) / denom;
  const double u = cross(w, d1) / denom;
  if (t < -slack || t > 1.0 + slack || u < -slack || u > 1.0 + slack) return false;
  hit.t = t;
  hit.u = u;
  hit.point = s.a + t * d1;
  hit.sin_angle = sin_angle;
  return true;
}

bool collinear_overlap(const Segment& s, const Segment& r, const Tolerance& tol) {
  const Vec2 d1 = s.b - s.a;
  const double l1 = norm(d1);
  if (l1 == 0.0) return false;
  // Both endpoints of r must lie on the carrier line of s.
  if (std::abs(cross(d1, r.a - s.a)) / l1 > tol.abs()) return false;
  if (std::abs(cross(d1, r.b - s.a)) / l1 > tol.abs()) return false;
  const double ta = dot(r.a - s.a, d1) / (l1 * l1);
  const double tb = dot(r.b - s.a, d1) / (l1 * l1);
  const double lo = std::max(0.0, std::min(ta, tb));
  const double hi = std::min(1.0, std::max(ta, tb));
  return (hi - lo) * l1 > tol.abs();
}

double point_segment_distance(Vec2 p, const Segment& s) {
  const Vec2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return dist(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return dist(p, s.a + t * d);
}

double polyline_length(std::span<const Vec2> pts) {
  double total = 0.0;
  for (size_t i = 1; i < pts.size(); ++i) total += dist(pts[i - 1], pts[i]);
  return total;
}

double signed_area(std::span<const Vec2> ring) {
  double a = 0.0;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) a += cross(ring[i], ring[(i + 1) % n]);
  return 0.5 * a;
}

bool point_in_ring(Vec2 p, std::span<const Vec2> ring) {
  bool inside = false;
  const size_t n = ring.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = ring[i], b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

Vec2 point_at_length(std::span<const Vec2> pts, double s) {
  if (pts.empty()) return {};
  double acc = 0.0;
  for (size_t i = 1; i < pts.size(); ++i) {
    const double l = dist(pts[i - 1], pts[i]);
    if (acc + l >= s && l > 0.0) {
      const double t = (s - acc) / l;
      return pts[i - 1] + t * (pts[i] - pts[i - 1]);
    }
    acc += l;
  }
  return pts.back();
}

SegmentGrid::SegmentGrid(const Frame& frame, int cells_per_side)
    : frame_(frame), n_(std::max(1, cells_per_side)) {
  cw_ = (frame.x1 - frame.x0) / n_;
  ch_ = (frame.y1 - frame.y0) / n_;
  buckets_.resize(static_cast<size_t>(n_ * n_));
}

void SegmentGrid::cell_range(const Segment& s, int& i0, int& i1, int& j0, int& j1) const {
  auto cx = [&](double x) {
    return std::clamp(static_cast<int>(std::floor((x - frame_.x0) / cw_)), 0, n_ - 1);
  };
  auto cy = [&](double y) {
    return std::clamp(static_cast<int>(std::floor((y - frame_.y0) / ch_)), 0, n_ - 1);
  };
  // Widen by a hair so segments on a bucket border are seen from both sides.
  const double pad = 1e-9 * (cw_ + ch_);
  i0 = cx(std::min(s.a.x, s.b.x) - pad);
  i1 = cx(std::max(s.a.x, s.b.x) + pad);
  j0 = cy(std::min(s.a.y, s.b.y) - pad);
  j1 = cy(std::max(s.a.y, s.b.y) + pad);
}

void SegmentGrid::insert(const Entry& e) {
  const int id = static_cast<int>(entries_.size());
  entries_.push_back(e);
  int i0, i1, j0, j1;
  cell_range(e.seg, i0, i1, j0, j1);
  for (int j = j0; j <= j1; ++j)
    for (int i = i0; i <= i1; ++i) buckets_[static_cast<size_t>(j * n_ + i)].push_back(id);
}

}  // namespace pareto
