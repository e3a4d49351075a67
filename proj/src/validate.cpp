#include "pareto/core.hpp"

#include <sstream>

namespace pareto {
namespace {

class Report {
 public:
  void add(std::string rule, std::string message) {
    out_.push_back({std::move(rule), std::move(message)});
  }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

std::string fmt_point(Vec2 p) {
  std::ostringstream s;
  s << '(' << p.x << ", " << p.y << ')';
  return s.str();
}

void check_arc_geometry(const SingularValueDiagram& d, const FoldArc& arc, const Tolerance& tol,
                        Report& r) {
  const auto& p = arc.points;
  if (p.size() < 2) {
    r.add("arc geometry", "arc " + arc.id + " has fewer than two points");
    return;
  }
  if (arc.closed() && p.size() < 4)
    r.add("arc geometry", "closed arc " + arc.id + " needs at least three distinct points");
  for (size_t k = 0; k < p.size(); ++k) {
    if (!d.frame.strictly_contains(p[k])) {
      r.add("outside frame", "arc " + arc.id + " point " + fmt_point(p[k]) + " is not inside the frame");
      break;
    }
  }
  for (size_t k = 0; k + 1 < p.size(); ++k) {
    const Vec2 s = p[k + 1] - p[k];
    if (tol.same_point(p[k], p[k + 1])) {
      r.add("repeated point", "arc " + arc.id + " repeats " + fmt_point(p[k]));
      return;
    }
    if (tol.is_zero(s.x) || tol.is_zero(s.y)) {
      r.add("axis-parallel segment",
            "arc " + arc.id + " has an axis-parallel segment at " + fmt_point(p[k]));
      return;
    }
  }
  const TransverseIndex& idx = arc.index;
  if (idx.i < 0 || idx.j < 0) r.add("index sum", "arc " + arc.id + " has a negative index count");
  if (idx.i + idx.j != d.n - 1) {
    std::ostringstream m;
    m << "arc " << arc.id << " has i+j=" << idx.i + idx.j << ", expected n-1=" << d.n - 1;
    r.add("index sum", m.str());
  }
  const Vec2 d0 = p[1] - p[0];
  if (norm(idx.v) == 0.0 || std::abs(cross(normalized(d0), normalized(idx.v))) < 1e-9)
    r.add("index direction", "arc " + arc.id + " index vector is not transverse to its first segment");

  // A vertex flipping both coordinate directions is a polyline corner, not a tangency.
  const auto tangencies = axis_tangencies(arc);
  for (size_t a = 0; a + 1 < tangencies.size(); ++a)
    if (tangencies[a].vertex == tangencies[a + 1].vertex)
      r.add("corner vertex", "arc " + arc.id + " flips both directions at " +
                                 fmt_point(tangencies[a].point));
  if (arc.closed())
    for (const auto& t : tangencies)
      if (t.vertex == 0)
        r.add("seam tangency", "closed arc " + arc.id + " has an axis tangency at its seam");

  // Non-adjacent segments must not meet.
  const size_t nseg = p.size() - 1;
  for (size_t a = 0; a < nseg; ++a) {
    for (size_t b = a + 2; b < nseg; ++b) {
      if (arc.closed() && a == 0 && b == nseg - 1) continue;
      SegmentHit hit;
      if (intersect_segments({p[a], p[a + 1]}, {p[b], p[b + 1]}, 0.0, hit)) {
        r.add("self-intersection", "arc " + arc.id + " crosses itself near " + fmt_point(hit.point));
        return;
      }
    }
  }
}

void check_cusps(const SingularValueDiagram& d, const Tolerance& tol, Report& r) {
  for (const auto& arc : d.arcs) {
    for (size_t e = 0; e < 2; ++e) {
      const Endpoint& ep = arc.endpoints[e];
      if (ep.is_free()) continue;
      if (arc.closed()) {
        r.add("cusp reference", "closed arc " + arc.id + " cannot end at a cusp");
        continue;
      }
      const Cusp* c = d.find_cusp(ep.cusp);
      if (!c) {
        r.add("cusp reference", "arc " + arc.id + " references unknown cusp " + ep.cusp);
        continue;
      }
      if (c->arcs[0] != arc.id && c->arcs[1] != arc.id)
        r.add("cusp reference", "cusp " + c->id + " does not list arc " + arc.id);
      const Vec2 at = e == 0 ? arc.points.front() : arc.points.back();
      if (!tol.same_point(at, c->point))
        r.add("cusp reference", "arc " + arc.id + " endpoint is not at cusp " + c->id);
    }
  }
  for (const auto& c : d.cusps) {
    const double tn = norm(c.tangent);
    if (tn == 0.0 || std::min(std::abs(c.tangent.x), std::abs(c.tangent.y)) / tn < 1e-6)
      r.add("axis-parallel cusp tangent", "cusp " + c.id + " has an axis-parallel tangent");
    std::array<std::pair<int, int>, 2> aligned{};
    bool ok = true;
    for (size_t k = 0; k < 2; ++k) {
      const FoldArc* a = d.find_arc(c.arcs[k]);
      if (!a || a->points.size() < 2) {
        r.add("cusp reference", "cusp " + c.id + " references unknown arc " + c.arcs[k]);
        ok = false;
        continue;
      }
      int ends_here = 0;
      size_t seg = 0;
      if (a->endpoints[0].cusp == c.id) {
        ++ends_here;
        seg = 0;
      }
      if (a->endpoints[1].cusp == c.id) {
        ++ends_here;
        seg = a->points.size() - 2;
      }
      if (ends_here != 1) {
        r.add("cusp reference", "cusp " + c.id + " must reference exactly one endpoint of " + a->id);
        ok = false;
        continue;
      }
      if (tn == 0.0) {
        ok = false;
        continue;
      }
      const Vec2 nc = perp(normalized(c.tangent));
      try {
        aligned[k] = index_along({a->side_normal(seg), a->index.i, a->index.j}, nc);
      } catch (const Error&) {
        ok = false;
      }
    }
    if (ok && c.arcs[0] == c.arcs[1]) {
      r.add("cusp reference", "cusp " + c.id + " joins an arc to itself");
      ok = false;
    }
    if (ok && std::abs(aligned[0].first - aligned[1].first) != 1)
      r.add("cusp index step", "arcs at cusp " + c.id + " do not differ by one in i");
  }
}

void check_heights(const SingularValueDiagram& d, const Tolerance& tol, Report& r) {
  std::vector<double> xs, ys;
  for (const auto& arc : d.arcs)
    for (const auto& t : axis_tangencies(arc))
      (t.axis == TangencyAxis::Vertical ? xs : ys).push_back(t.axis == TangencyAxis::Vertical ? t.point.x : t.point.y);
  auto distinct = [&](std::vector<double> v, const char* what) {
    std::sort(v.begin(), v.end());
    for (size_t k = 1; k < v.size(); ++k)
      if (v[k] - v[k - 1] <= tol.abs()) {
        std::ostringstream m;
        m << what << " tangencies share the critical height " << v[k];
        r.add("distinct critical heights", m.str());
      }
  };
  distinct(xs, "vertical");
  distinct(ys, "horizontal");
}

}  // namespace

std::vector<Violation> validate_diagram(const SingularValueDiagram& d) {
  Report r;
  if (d.n < 2) r.add("dimension", "manifold dimension must be at least 2");
  if (d.field != "Z/2") r.add("field", "only the Z/2 coefficient field is supported");
  if (!(d.frame.x1 > d.frame.x0 && d.frame.y1 > d.frame.y0)) {
    r.add("frame", "frame is empty");
    return r.take();
  }
  const Tolerance tol = Tolerance::for_frame(d.frame);
  for (size_t a = 0; a < d.arcs.size(); ++a)
    for (size_t b = a + 1; b < d.arcs.size(); ++b)
      if (d.arcs[a].id == d.arcs[b].id) r.add("duplicate id", "arc id " + d.arcs[a].id + " repeats");
  for (const auto& arc : d.arcs) check_arc_geometry(d, arc, tol, r);
  check_cusps(d, tol, r);
  check_heights(d, tol, r);
  if (d.total_poly && d.total_poly->degree() > d.n)
    r.add("total polynomial", "total polynomial degree exceeds n");
  return r.take();
}

void require_valid(const SingularValueDiagram& d) {
  const auto report = validate_diagram(d);
  if (report.empty()) return;
  std::string msg = "invalid diagram:";
  for (const auto& v : report) msg += " [" + v.rule + "] " + v.message + ";";
  throw Error(ErrorCode::InvalidInput, msg);
}

}  // namespace pareto
