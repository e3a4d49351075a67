#include "pareto/labeling.hpp"

#include <deque>
#include <functional>
#include <optional>
#include <set>

namespace pareto {
namespace {

struct Step {
  int edge = -1;   // edge crossed to reach the face, -1 at the root
  int parent = -1;
};

std::string trail(const Arrangement& arr, const std::vector<Step>& steps, int face) {
  std::vector<std::string> keys;
  for (int f = face; f >= 0 && steps[static_cast<size_t>(f)].edge >= 0; f = steps[static_cast<size_t>(f)].parent)
    keys.push_back(arr.edges[static_cast<size_t>(steps[static_cast<size_t>(f)].edge)].piece_key());
  std::string out = "bottom";
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) out += " > " + *it;
  return out;
}

// Labels every face reachable from the bottom face through edges with known
// effects. Returns false (or throws when `strict`) on any contradiction.
bool propagate(const Arrangement& arr, const std::function<const EffectSpec*(const ArrEdge&)>& effect_of,
               std::vector<std::optional<PoincarePolynomial>>& label, bool strict) {
  const size_t nf = arr.faces.size();
  label.assign(nf, std::nullopt);
  std::vector<Step> steps(nf);
  std::vector<std::vector<int>> incident(nf);
  for (size_t e = 0; e < arr.edges.size(); ++e) {
    const auto& edge = arr.edges[e];
    if (edge.is_frame()) continue;
    incident[static_cast<size_t>(edge.lower)].push_back(static_cast<int>(e));
    incident[static_cast<size_t>(edge.upper)].push_back(static_cast<int>(e));
  }
  const int root = arr.bottom_face();
  label[static_cast<size_t>(root)] = PoincarePolynomial{};
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int e : incident[static_cast<size_t>(f)]) {
      const auto& edge = arr.edges[static_cast<size_t>(e)];
      const EffectSpec* spec = effect_of(edge);
      if (!spec) continue;
      const int dim = arr.pareto[static_cast<size_t>(edge.pareto)].cell_dim;
      const bool upward = edge.lower == f;
      const int g = upward ? edge.upper : edge.lower;
      PoincarePolynomial next;
      try {
        next = upward ? poly_apply_delta(*label[static_cast<size_t>(f)], dim, spec->effect)
                      : poly_unapply_delta(*label[static_cast<size_t>(f)], dim, spec->effect);
      } catch (const Error& err) {
        if (!strict) return false;
        throw Error(ErrorCode::Inconsistency,
                    std::string(err.what()) + " crossing " + edge.piece_key() + " after " + trail(arr, steps, f));
      }
      auto& slot = label[static_cast<size_t>(g)];
      if (!slot) {
        slot = next;
        steps[static_cast<size_t>(g)] = {e, f};
        queue.push_back(g);
      } else if (*slot != next) {
        if (!strict) return false;
        throw Error(ErrorCode::Inconsistency,
                    "face " + std::to_string(g) + " labeled " + slot->to_string() + " via " +
                        trail(arr, steps, g) + " but " + next.to_string() + " via " + trail(arr, steps, f) +
                        " > " + edge.piece_key());
      }
    }
  }
  return true;
}

}  // namespace

const EffectSpec* edge_effect(const EffectMap& effects, const ArrEdge& edge) {
  if (auto it = effects.find(edge.piece_key()); it != effects.end()) return &it->second;
  if (auto it = effects.find(edge.key); it != effects.end()) return &it->second;
  return nullptr;
}

RegionLabeling propagate_labels(const Arrangement& arr, const EffectMap& effects,
                                const std::optional<PoincarePolynomial>& total_poly) {
  std::set<std::string> missing;
  for (const auto& e : arr.edges)
    if (!e.is_frame() && !edge_effect(effects, e)) missing.insert(e.key);
  if (!missing.empty()) {
    std::string msg = "missing effects for:";
    for (const auto& k : missing) msg += " " + k;
    throw Error(ErrorCode::IncompleteAnnotation, msg);
  }
  std::vector<std::optional<PoincarePolynomial>> label;
  propagate(arr, [&](const ArrEdge& e) { return edge_effect(effects, e); }, label, true);

  RegionLabeling out;
  for (size_t f = 0; f < label.size(); ++f) {
    if (!label[f]) throw Error(ErrorCode::Inconsistency, "face " + std::to_string(f) + " unreachable");
    out.labels.push_back(*label[f]);
  }
  for (const auto& e : arr.edges)
    if (!e.is_frame()) out.edge_effects[e.piece_key()] = *edge_effect(effects, e);
  if (total_poly && out.labels[static_cast<size_t>(arr.top_face())] != *total_poly)
    throw Error(ErrorCode::Inconsistency, "top face labeled " +
                                              out.labels[static_cast<size_t>(arr.top_face())].to_string() +
                                              ", expected " + total_poly->to_string());
  return out;
}

RegionLabeling propagate_labels(const Arrangement& arr, const SingularValueDiagram& d) {
  return propagate_labels(arr, d.effects, d.total_poly);
}

std::vector<EffectMap> infer_effects(const Arrangement& arr, const SingularValueDiagram& d, size_t cap) {
  if (!d.total_poly) throw Error(ErrorCode::InvalidInput, "effect inference needs total_poly");
  std::vector<std::string> unknown;
  for (const auto& e : arr.edges) {
    if (e.is_frame() || edge_effect(d.effects, e)) continue;
    // Rays may switch from kill to create where they cross other curves.
    const bool ray = arr.pareto[static_cast<size_t>(e.pareto)].kind != ParetoKind::Corner;
    const std::string key = ray ? e.piece_key() : e.key;
    if (std::find(unknown.begin(), unknown.end(), key) == unknown.end()) unknown.push_back(key);
  }
  if (unknown.size() > cap)
    throw Error(ErrorCode::CapExceeded, std::to_string(unknown.size()) + " unannotated keys exceed the cap of " +
                                            std::to_string(cap));

  std::vector<EffectMap> found;
  EffectMap trial = d.effects;
  std::vector<std::optional<PoincarePolynomial>> label;
  auto partial_ok = [&]() {
    return propagate(arr, [&](const ArrEdge& e) { return edge_effect(trial, e); }, label, false);
  };
  std::function<void(size_t)> search = [&](size_t k) {
    if (!partial_ok()) return;
    if (k == unknown.size()) {
      const auto& top = label[static_cast<size_t>(arr.top_face())];
      if (top && *top == *d.total_poly) found.push_back(trial);
      return;
    }
    for (Effect eff : {Effect::Create, Effect::Kill}) {
      trial[unknown[k]] = EffectSpec{eff, {}};
      search(k + 1);
    }
    trial.erase(unknown[k]);
  };
  search(0);
  return found;
}

std::vector<int> poly_difference(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  std::vector<int> out(static_cast<size_t>(std::max(a.degree(), b.degree()) + 1), 0);
  for (int k = 0; k < static_cast<int>(out.size()); ++k) out[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<int> vertex_delta(const Arrangement& arr, const RegionLabeling& lab, int vertex) {
  const Vec2 v = arr.vertices.at(static_cast<size_t>(vertex));
  const double r = 1e-5 * arr.frame.diagonal();
  const int lo = arr.locate(v - Vec2{r, r});
  const int hi = arr.locate(v + Vec2{r, r});
  return poly_difference(lab.labels[static_cast<size_t>(hi)], lab.labels[static_cast<size_t>(lo)]);
}

}  // namespace pareto
