#pragma once

#include "pareto/arrangement.hpp"

#include <map>
#include <string>
#include <vector>

namespace pareto {

struct RegionLabeling {
  std::vector<PoincarePolynomial> labels;  // indexed by face id
  // Effect per Pareto edge, keyed by ArrEdge::piece_key().
  std::map<std::string, EffectSpec> edge_effects;
};

// The annotation for one edge: "<key>#<piece>" first, then "<key>". Null if absent.
const EffectSpec* edge_effect(const EffectMap& effects, const ArrEdge& edge);

RegionLabeling propagate_labels(const Arrangement& arr, const EffectMap& effects,
                                const std::optional<PoincarePolynomial>& total_poly);
RegionLabeling propagate_labels(const Arrangement& arr, const SingularValueDiagram& d);

// Every effect map extending d.effects (one value per unannotated corner key
// and per unannotated ray piece)
// whose labeling succeeds and reaches total_poly at the top face.
std::vector<EffectMap> infer_effects(const Arrangement& arr, const SingularValueDiagram& d,
                                     size_t cap = 20);

// Signed coefficients of label(just above-right of v) - label(just below-left of v).
std::vector<int> vertex_delta(const Arrangement& arr, const RegionLabeling& lab, int vertex);

// Signed difference a - b, trimmed.
std::vector<int> poly_difference(const PoincarePolynomial& a, const PoincarePolynomial& b);

}  // namespace pareto
