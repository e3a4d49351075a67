#include "pareto/criticality.hpp"

#include <algorithm>
#include <sstream>

namespace pareto {
namespace {

Vec2 positive_normal(Vec2 a, Vec2 b) {
  Vec2 n = perp(normalized(b - a));
  if (n.x < 0.0) n = -n;
  return n;
}

// Rotates a closed polyline so it starts at vertex `start`.
std::vector<Vec2> rotate_closed(const std::vector<Vec2>& p, size_t start) {
  const size_t nseg = p.size() - 1;
  std::vector<Vec2> out;
  out.reserve(p.size());
  for (size_t k = 0; k <= nseg; ++k) out.push_back(p[(start + k) % nseg]);
  return out;
}

}  // namespace

std::string_view to_string(ParetoKind k) {
  switch (k) {
    case ParetoKind::Corner: return "corner";
    case ParetoKind::TailVertical: return "tail-vertical";
    case ParetoKind::TailHorizontal: return "tail-horizontal";
  }
  return "corner";
}

std::string_view to_string(Kiss k) {
  switch (k) {
    case Kiss::None: return "none";
    case Kiss::Exterior: return "exterior";
    case Kiss::Interior: return "interior";
  }
  return "none";
}

Vec2 ParetoArc::sweep_at(size_t segment) const {
  switch (kind) {
    case ParetoKind::TailVertical: return {1.0, 0.0};
    case ParetoKind::TailHorizontal: return {0.0, 1.0};
    case ParetoKind::Corner: break;
  }
  return positive_normal(geometry[segment], geometry[segment + 1]);
}

SplitResult monotone_split(const FoldArc& arc) {
  SplitResult out;
  out.tangencies = axis_tangencies(arc);
  if (arc.points.size() < 2) return out;

  std::vector<Vec2> pts = arc.points;
  std::vector<size_t> cuts;  // vertex indices in `pts` where runs break
  FoldArc work = arc;
  if (arc.closed() && !out.tangencies.empty()) {
    const size_t start = out.tangencies.front().vertex;
    pts = rotate_closed(arc.points, start);
    work.points = pts;
    const size_t nseg = arc.points.size() - 1;
    for (const auto& t : out.tangencies) cuts.push_back((t.vertex + nseg - start) % nseg);
    cuts.push_back(nseg);
  } else {
    cuts.push_back(0);
    for (const auto& t : out.tangencies) cuts.push_back(t.vertex);
    cuts.push_back(pts.size() - 1);
  }
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // The index side is fixed by the original first segment; keep it when rotating.
  const int side = arc.side();
  int ordinal = 0;
  for (size_t c = 0; c + 1 < cuts.size(); ++c) {
    MonotoneSegment seg;
    seg.points.assign(pts.begin() + static_cast<std::ptrdiff_t>(cuts[c]),
                      pts.begin() + static_cast<std::ptrdiff_t>(cuts[c + 1]) + 1);
    if (seg.points.size() < 2) continue;
    const Vec2 d = seg.points[1] - seg.points[0];
    seg.kind = d.x * d.y < 0.0 ? Monotonicity::Descending : Monotonicity::Ascending;
    const Vec2 left = perp(normalized(d));
    seg.side_normal = side > 0 ? left : -left;
    seg.ordinal = ordinal++;
    out.segments.push_back(std::move(seg));
  }
  return out;
}

int corner_cell_dim(const MonotoneSegment& segment, const TransverseIndex& index, int n,
                    IndexConvention convention) {
  if (segment.kind != Monotonicity::Descending || segment.points.size() < 2)
    throw Error(ErrorCode::Geometry, "corner cell dimension needs a descending segment");
  const Vec2 u = positive_normal(segment.points[0], segment.points[1]);
  const auto [i, j] = index_along({segment.side_normal, index.i, index.j}, u);
  const int dim = convention.corner_reads_j ? j : i;
  if (dim < 0 || dim > n) throw Error(ErrorCode::Geometry, "corner cell dimension out of range");
  return dim;
}

std::vector<ParetoArc> tail_rays(const SingularValueDiagram& d, const FoldArc& arc,
                                 const SplitResult& split, IndexConvention convention) {
  std::vector<ParetoArc> out;
  const auto& p = arc.points;
  const size_t nseg = p.size() - 1;
  int vcount = 0, hcount = 0;
  for (const auto& t : split.tangencies) {
    if (!arc.closed() && (t.vertex == 0 || t.vertex == nseg))
      throw Error(ErrorCode::Genericity, "tangency at an arc endpoint of " + arc.id);
    const size_t in = arc.closed() ? (t.vertex + nseg - 1) % nseg : t.vertex - 1;
    const size_t outs = t.vertex % nseg;
    const Vec2 normal = normalized(arc.side_normal(in) + arc.side_normal(outs));

    ParetoArc ray;
    const bool vertical = t.axis == TangencyAxis::Vertical;
    ray.kind = vertical ? ParetoKind::TailVertical : ParetoKind::TailHorizontal;
    ray.geometry = {t.point, vertical ? Vec2{t.point.x, d.frame.y1} : Vec2{d.frame.x1, t.point.y}};
    ray.kiss = t.is_min ? Kiss::Exterior : Kiss::Interior;
    const Vec2 sweep = vertical ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    const auto [i, j] = index_along({normal, arc.index.i, arc.index.j}, sweep);
    const int base = convention.corner_reads_j ? j : i;
    const bool plus_one = convention.interior_tail_adds_one ? ray.kiss == Kiss::Interior
                                                            : ray.kiss == Kiss::Exterior;
    ray.cell_dim = base + (plus_one ? 1 : 0);
    std::ostringstream key;
    key << (vertical ? "v:" : "h:") << arc.id << ':' << (vertical ? vcount++ : hcount++);
    ray.key = key.str();
    ray.source = arc.id + "@" + std::to_string(t.vertex);
    if (ray.cell_dim > d.n)
      throw Error(ErrorCode::Geometry, "tail cell dimension exceeds n at " + ray.key);
    out.push_back(std::move(ray));
  }
  return out;
}

std::vector<ParetoArc> compute_critical_set(const SingularValueDiagram& d,
                                            IndexConvention convention) {
  require_valid(d);
  std::vector<ParetoArc> out;
  for (const auto& arc : d.arcs) {
    const SplitResult split = monotone_split(arc);
    int corner = 0;
    for (const auto& seg : split.segments) {
      if (seg.kind != Monotonicity::Descending) continue;
      ParetoArc pa;
      pa.kind = ParetoKind::Corner;
      pa.geometry = seg.points;
      if (pa.geometry.front().x > pa.geometry.back().x)
        std::reverse(pa.geometry.begin(), pa.geometry.end());
      pa.cell_dim = corner_cell_dim(seg, arc.index, d.n, convention);
      pa.key = "c:" + arc.id + ":" + std::to_string(corner++);
      pa.source = arc.id;
      out.push_back(std::move(pa));
    }
    auto rays = tail_rays(d, arc, split, convention);
    out.insert(out.end(), std::make_move_iterator(rays.begin()), std::make_move_iterator(rays.end()));
  }
  return out;
}

}  // namespace pareto
