#include "pareto/json_io.hpp"

namespace pareto {
namespace {

Json pt(Vec2 p) { return Json::array({p.x, p.y}); }

Json pts(const std::vector<Vec2>& v) {
  Json a = Json::array();
  for (Vec2 p : v) a.push_back(pt(p));
  return a;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Vec2 point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("a point must be [x, y]");
  return {number(j[0], "coordinate"), number(j[1], "coordinate")};
}

Json poly(const PoincarePolynomial& p) { return Json(p.coeffs()); }

Json effect_json(const EffectSpec& e) {
  if (e.pairs_with.empty()) return std::string(to_string(e.effect));
  return Json{{"effect", std::string(to_string(e.effect))}, {"pairs_with", e.pairs_with}};
}

EffectSpec effect_from(const Json& j) {
  if (j.is_string()) return {effect_from_string(j.get<std::string>()), {}};
  if (j.is_object()) {
    EffectSpec e{effect_from_string(field(j, "effect").get<std::string>()), {}};
    if (j.contains("pairs_with")) e.pairs_with = j.at("pairs_with").get<std::string>();
    return e;
  }
  bad("an effect must be \"create\", \"kill\" or an object");
}

}  // namespace

std::vector<Vec2> points_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a list of points");
  std::vector<Vec2> out;
  for (const auto& p : j) out.push_back(point_from(p));
  return out;
}

Json to_json(const SingularValueDiagram& d) {
  Json j;
  j["n"] = d.n;
  j["frame"] = {{"x0", d.frame.x0}, {"y0", d.frame.y0}, {"x1", d.frame.x1}, {"y1", d.frame.y1}};
  j["arcs"] = Json::array();
  for (const auto& a : d.arcs) {
    Json ends = Json::array();
    for (const auto& e : a.endpoints) ends.push_back(e.is_free() ? Json(nullptr) : Json(e.cusp));
    j["arcs"].push_back({{"id", a.id},
                         {"points", pts(a.points)},
                         {"index", {{"v", pt(a.index.v)}, {"i", a.index.i}, {"j", a.index.j}}},
                         {"endpoints", ends}});
  }
  j["cusps"] = Json::array();
  for (const auto& c : d.cusps)
    j["cusps"].push_back({{"id", c.id}, {"point", pt(c.point)}, {"arcs", {c.arcs[0], c.arcs[1]}}, {"tangent", pt(c.tangent)}});
  if (d.total_poly) j["total_poly"] = poly(*d.total_poly);
  j["effects"] = Json::object();
  for (const auto& [k, e] : d.effects) j["effects"][k] = effect_json(e);
  j["field"] = d.field;
  return j;
}

SingularValueDiagram diagram_from_json(const Json& j) {
  if (!j.is_object()) bad("a diagram must be a JSON object");
  SingularValueDiagram d;
  d.n = integer(field(j, "n"), "n");
  const Json& f = field(j, "frame");
  d.frame = {number(field(f, "x0"), "x0"), number(field(f, "y0"), "y0"), number(field(f, "x1"), "x1"),
             number(field(f, "y1"), "y1")};
  if (j.contains("arcs")) {
    for (const auto& a : j.at("arcs")) {
      FoldArc arc;
      arc.id = field(a, "id").get<std::string>();
      arc.points = points_from_json(field(a, "points"));
      const Json& idx = field(a, "index");
      arc.index = canonical_index(point_from(field(idx, "v")), integer(field(idx, "i"), "i"), integer(field(idx, "j"), "j"));
      if (a.contains("endpoints")) {
        const Json& ends = a.at("endpoints");
        if (!ends.is_array() || ends.size() > 2) bad("endpoints must list at most two entries");
        for (size_t k = 0; k < ends.size(); ++k) {
          const Json& e = ends[k];
          if (e.is_null() || (e.is_string() && e.get<std::string>() == "free")) continue;
          if (e.is_string()) arc.endpoints[k].cusp = e.get<std::string>();
          else if (e.is_object()) arc.endpoints[k].cusp = field(e, "cusp").get<std::string>();
          else bad("an endpoint is null, \"free\", a cusp id or {\"cusp\": id}");
        }
      }
      d.arcs.push_back(std::move(arc));
    }
  }
  if (j.contains("cusps")) {
    size_t k = 0;
    for (const auto& c : j.at("cusps")) {
      Cusp cusp;
      cusp.id = c.contains("id") ? c.at("id").get<std::string>() : "cusp" + std::to_string(k);
      cusp.point = point_from(field(c, "point"));
      const Json& arcs = field(c, "arcs");
      if (!arcs.is_array() || arcs.size() != 2) bad("a cusp joins exactly two arcs");
      cusp.arcs = {arcs[0].get<std::string>(), arcs[1].get<std::string>()};
      cusp.tangent = point_from(field(c, "tangent"));
      d.cusps.push_back(std::move(cusp));
      ++k;
    }
  }
  if (j.contains("total_poly") && !j.at("total_poly").is_null()) {
    std::vector<int> c;
    for (const auto& x : j.at("total_poly")) c.push_back(integer(x, "total_poly coefficient"));
    d.total_poly = PoincarePolynomial(std::move(c));
  }
  if (j.contains("effects")) {
    const Json& e = j.at("effects");
    if (!e.is_object()) bad("effects must be an object");
    for (const auto& [k, v] : e.items()) d.effects[k] = effect_from(v);
  }
  if (j.contains("field")) d.field = j.at("field").get<std::string>();
  if (d.field != "Z/2") bad("only the field Z/2 is supported");
  return d;
}

Json to_json(const std::vector<ParetoArc>& pareto) {
  Json a = Json::array();
  for (const auto& p : pareto) {
    Json x{{"key", p.key},
           {"kind", std::string(to_string(p.kind))},
           {"geometry", pts(p.geometry)},
           {"cell_dim", p.cell_dim},
           {"source", p.source}};
    if (p.kind != ParetoKind::Corner) x["kiss"] = std::string(to_string(p.kiss));
    a.push_back(std::move(x));
  }
  return a;
}

Json to_json(const Arrangement& arr) {
  Json j;
  j["frame"] = {{"x0", arr.frame.x0}, {"y0", arr.frame.y0}, {"x1", arr.frame.x1}, {"y1", arr.frame.y1}};
  j["pareto"] = to_json(arr.pareto);
  j["vertices"] = pts(arr.vertices);
  j["edges"] = Json::array();
  for (size_t e = 0; e < arr.edges.size(); ++e) {
    const auto& edge = arr.edges[e];
    Json x{{"id", e}, {"v0", edge.v0}, {"v1", edge.v1}, {"key", edge.key}, {"points", pts(edge.points)}};
    if (!edge.is_frame()) {
      x["piece"] = edge.piece_key();
      x["cell_dim"] = arr.pareto[static_cast<size_t>(edge.pareto)].cell_dim;
      x["kind"] = std::string(to_string(arr.pareto[static_cast<size_t>(edge.pareto)].kind));
    }
    x["lower"] = edge.lower;
    x["upper"] = edge.upper < 0 ? Json(nullptr) : Json(edge.upper);
    j["edges"].push_back(std::move(x));
  }
  j["faces"] = Json::array();
  for (size_t f = 0; f < arr.faces.size(); ++f) {
    const auto& face = arr.faces[f];
    Json holes = Json::array();
    for (const auto& h : face.holes) holes.push_back(pts(h));
    j["faces"].push_back({{"id", f}, {"sample", pt(face.sample)}, {"boundary", pts(face.outer)}, {"holes", holes},
                          {"cycles", face.cycles}});
  }
  j["bottom_face"] = arr.bottom_face();
  j["top_face"] = arr.top_face();
  return j;
}

Json to_json(const Arrangement& arr, const RegionLabeling& lab) {
  Json j;
  j["faces"] = Json::array();
  for (size_t f = 0; f < lab.labels.size(); ++f)
    j["faces"].push_back({{"face", f},
                          {"sample", pt(arr.faces[f].sample)},
                          {"coeffs", poly(lab.labels[f])},
                          {"label", lab.labels[f].to_string()}});
  j["effects"] = Json::object();
  for (const auto& [k, e] : lab.edge_effects) j["effects"][k] = effect_json(e);
  return j;
}

Json to_json(const PersistencePath& path) {
  Json j;
  j["waypoints"] = pts(path.waypoints);
  j["realization"] = pts(path.realization);
  j["length"] = path.length;
  j["crossings"] = Json::array();
  for (const auto& c : path.crossings)
    j["crossings"].push_back({{"s", c.s},
                              {"key", c.key},
                              {"piece", c.piece},
                              {"cell_dim", c.cell_dim},
                              {"effect", std::string(to_string(c.effect))},
                              {"delta", {{"sign", c.delta.sign}, {"degree", c.delta.degree}}},
                              {"point", pt(c.point)}});
  return j;
}

Json to_json(const Barcode& b) {
  Json dims = Json::array();
  for (const auto& bars : b.dims) {
    Json d = Json::array();
    for (const auto& bar : bars)
      d.push_back({bar.birth, bar.death ? Json(*bar.death) : Json(nullptr), bar.birth_key,
                   bar.death ? Json(bar.death_key) : Json(nullptr)});
    dims.push_back(std::move(d));
  }
  return Json{{"bars", dims}};
}

Json to_json(const MorseReport& r) {
  return Json{{"c", r.c},
              {"Q", r.conley.Q},
              {"conley_ok", r.conley.ok},
              {"conley_detail", r.conley.detail},
              {"chi", r.chi},
              {"euler_ok", r.ineq.euler},
              {"weak", r.ineq.weak},
              {"strong", r.ineq.strong}};
}

Json to_json(const PathFamily& fam) {
  Json j;
  j["truncated"] = fam.truncated;
  j["paths"] = Json::array();
  for (const auto& p : fam.paths) j["paths"].push_back(to_json(p));
  j["classes"] = equivalence_classes(fam.paths);
  return j;
}

Json to_json(const SampledModel& m) {
  Json cells = Json::array();
  for (size_t c = 0; c < m.size(); ++c) {
    const int id = static_cast<int>(c);
    if (m.dim(id) == 0) cells.push_back({{"dim", 0}, {"value", pt(m.value(id))}});
    else cells.push_back({{"dim", m.dim(id)}, {"boundary", m.boundary(id)}});
  }
  return Json{{"name", m.name}, {"cells", cells}};
}

SampledModel model_from_json(const Json& j) {
  SampledModel m;
  if (j.contains("name")) m.name = j.at("name").get<std::string>();
  for (const auto& c : field(j, "cells")) {
    const int d = integer(field(c, "dim"), "dim");
    if (d == 0) m.add_vertex(point_from(field(c, "value")));
    else m.add_cell(d, field(c, "boundary").get<std::vector<int>>());
  }
  return m;
}

Json to_json(const std::vector<Violation>& violations) {
  Json a = Json::array();
  for (const auto& v : violations) a.push_back({{"rule", v.rule}, {"message", v.message}});
  return a;
}

Json error_json(const Error& e) {
  return Json{{"error", {{"code", std::string(e.code_name())}, {"message", e.what()}}}};
}

PersistencePath path_from_json(const Json& j, const Arrangement& arr, const RegionLabeling& lab) {
  if (j.is_object() && j.contains("realization")) return path_from_realization(arr, lab, points_from_json(j.at("realization")));
  if (j.is_object() && j.contains("waypoints")) return make_path(arr, lab, points_from_json(j.at("waypoints")));
  if (j.is_array()) return make_path(arr, lab, points_from_json(j));
  bad("a path needs \"waypoints\" or \"realization\"");
}

Json polynomials_json(const std::vector<PoincarePolynomial>& polys) {
  Json a = Json::array();
  for (size_t f = 0; f < polys.size(); ++f) a.push_back({{"face", f}, {"coeffs", poly(polys[f])}, {"label", polys[f].to_string()}});
  return a;
}

}  // namespace pareto
