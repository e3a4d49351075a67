#pragma once

#include "pareto/paths.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pareto {

struct Bar {
  double birth = 0.0;
  std::optional<double> death;  // empty for an infinite bar
  std::string birth_key;        // edge piece key of the creating crossing
  std::string death_key;

  bool infinite() const { return !death.has_value(); }
};

struct Barcode {
  std::vector<std::vector<Bar>> dims;  // dims[q] sorted by birth

  const std::vector<Bar>& bars(int q) const;
  int count(int q) const { return static_cast<int>(bars(q).size()); }
  int infinite_count(int q) const;
};

// Sweeps the crossings: a create opens a bar in its cell dimension, a kill
// closes the youngest open bar one dimension lower (or the bar named by
// pairs_with). Throws Inconsistency when no bar is open.
Barcode compute_barcode(const PersistencePath& path);

// Same bar counts and the same merged birth/death sequence, ignoring lengths.
bool barcodes_equivalent(const Barcode& a, const Barcode& b);

// Partition by barcode equivalence, classes ordered by first member.
std::vector<std::vector<size_t>> equivalence_classes(const std::vector<PersistencePath>& family);
std::vector<std::vector<size_t>> equivalence_classes(const std::vector<Barcode>& barcodes);

// Number of dimension-q bars whose interval contains [s1, s2].
int pbn_along_path(const Barcode& barcode, double s1, double s2, int q);

}  // namespace pareto
