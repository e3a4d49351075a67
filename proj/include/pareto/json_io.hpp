#pragma once

#include "pareto/barcodes.hpp"
#include "pareto/morse.hpp"
#include "pareto/oracle.hpp"

#include <json.hpp>

namespace pareto {

using Json = nlohmann::json;

// Schema errors throw Error(InvalidInput); syntax errors are left to the parser.
Json to_json(const SingularValueDiagram& d);
SingularValueDiagram diagram_from_json(const Json& j);

Json to_json(const std::vector<ParetoArc>& pareto);
Json to_json(const Arrangement& arr);
Json to_json(const Arrangement& arr, const RegionLabeling& lab);
Json to_json(const PersistencePath& path);
Json to_json(const Barcode& b);
Json to_json(const MorseReport& r);
Json to_json(const PathFamily& fam);
Json to_json(const SampledModel& m);
SampledModel model_from_json(const Json& j);
Json to_json(const std::vector<Violation>& violations);
Json error_json(const Error& e);

std::vector<Vec2> points_from_json(const Json& j);

// A path document is either {"waypoints": [...]} (routed with make_path) or a
// path with a "realization" polyline.
PersistencePath path_from_json(const Json& j, const Arrangement& arr, const RegionLabeling& lab);

// Face id -> polynomial map emitted by the oracle command.
Json polynomials_json(const std::vector<PoincarePolynomial>& polys);

}  // namespace pareto
