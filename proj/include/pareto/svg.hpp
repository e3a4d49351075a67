#pragma once

#include "pareto/barcodes.hpp"

#include <string>
#include <vector>

namespace pareto {

// Faces (filled and annotated when a labeling is given), Pareto arcs and
// optional path overlays. Rays are dashed; creating arcs blue, killing red.
std::string svg_arrangement(const Arrangement& arr, const RegionLabeling* lab = nullptr,
                            const std::vector<PersistencePath>& paths = {});

// One strip per bar over s in [0, 1]; dimension 0 green, 1 brown, 2 cyan.
std::string svg_barcode(const Barcode& b);

}  // namespace pareto
