#include "pareto/barcodes.hpp"

#include <algorithm>
#include <tuple>

namespace pareto {
namespace {

const std::vector<Bar> kNoBars;

using Symbol = std::tuple<int, int, int>;  // dimension, 0 birth / 1 death, bar index

std::vector<Symbol> event_sequence(const Barcode& b) {
  struct Ev {
    double s;
    int dim, kind, bar;
  };
  std::vector<Ev> evs;
  for (size_t q = 0; q < b.dims.size(); ++q)
    for (size_t m = 0; m < b.dims[q].size(); ++m) {
      const Bar& bar = b.dims[q][m];
      evs.push_back({bar.birth, int(q), 0, int(m)});
      if (bar.death) evs.push_back({*bar.death, int(q), 1, int(m)});
    }
  std::sort(evs.begin(), evs.end(), [](const Ev& x, const Ev& y) {
    return std::tie(x.s, x.dim, x.kind, x.bar) < std::tie(y.s, y.dim, y.kind, y.bar);
  });
  std::vector<Symbol> out;
  for (const auto& e : evs) out.emplace_back(e.dim, e.kind, e.bar);
  return out;
}

}  // namespace

const std::vector<Bar>& Barcode::bars(int q) const {
  if (q < 0 || q >= static_cast<int>(dims.size())) return kNoBars;
  return dims[static_cast<size_t>(q)];
}

int Barcode::infinite_count(int q) const {
  int n = 0;
  for (const auto& b : bars(q)) n += b.infinite() ? 1 : 0;
  return n;
}

Barcode compute_barcode(const PersistencePath& path) {
  Barcode out;
  std::vector<std::vector<size_t>> open;
  auto ensure = [&](int q) {
    if (out.dims.size() <= static_cast<size_t>(q)) {
      out.dims.resize(static_cast<size_t>(q) + 1);
      open.resize(static_cast<size_t>(q) + 1);
    }
  };
  for (const auto& c : path.crossings) {
    if (c.effect == Effect::Create) {
      ensure(c.cell_dim);
      open[static_cast<size_t>(c.cell_dim)].push_back(out.dims[static_cast<size_t>(c.cell_dim)].size());
      out.dims[static_cast<size_t>(c.cell_dim)].push_back({c.s, std::nullopt, c.piece, {}});
      continue;
    }
    const int q = c.cell_dim - 1;
    if (q < 0 || static_cast<size_t>(q) >= open.size() || open[static_cast<size_t>(q)].empty())
      throw Error(ErrorCode::Inconsistency, "kill at " + c.piece + " finds no open bar in dimension " + std::to_string(q));
    auto& stack = open[static_cast<size_t>(q)];
    auto pick = stack.end() - 1;
    if (!c.pairs_with.empty()) {
      pick = std::find_if(stack.begin(), stack.end(), [&](size_t m) {
        const std::string& k = out.dims[static_cast<size_t>(q)][m].birth_key;
        return k == c.pairs_with || k.rfind(c.pairs_with + "#", 0) == 0;
      });
      if (pick == stack.end())
        throw Error(ErrorCode::Inconsistency, "kill at " + c.piece + " pairs with " + c.pairs_with + ", which is not open");
    }
    Bar& bar = out.dims[static_cast<size_t>(q)][*pick];
    bar.death = c.s;
    bar.death_key = c.piece;
    stack.erase(pick);
  }
  return out;
}

bool barcodes_equivalent(const Barcode& a, const Barcode& b) {
  const size_t dims = std::max(a.dims.size(), b.dims.size());
  for (size_t q = 0; q < dims; ++q)
    if (a.count(static_cast<int>(q)) != b.count(static_cast<int>(q))) return false;
  return event_sequence(a) == event_sequence(b);
}

std::vector<std::vector<size_t>> equivalence_classes(const std::vector<Barcode>& barcodes) {
  std::vector<std::vector<size_t>> classes;
  for (size_t k = 0; k < barcodes.size(); ++k) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& cls) { return barcodes_equivalent(barcodes[cls.front()], barcodes[k]); });
    if (it == classes.end()) classes.push_back({k});
    else it->push_back(k);
  }
  return classes;
}

std::vector<std::vector<size_t>> equivalence_classes(const std::vector<PersistencePath>& family) {
  std::vector<Barcode> bcs;
  bcs.reserve(family.size());
  for (const auto& p : family) bcs.push_back(compute_barcode(p));
  return equivalence_classes(bcs);
}

int pbn_along_path(const Barcode& barcode, double s1, double s2, int q) {
  int n = 0;
  for (const auto& bar : barcode.bars(q))
    if (bar.birth <= s1 && (bar.infinite() || *bar.death > s2)) ++n;
  return n;
}

}  // namespace pareto
