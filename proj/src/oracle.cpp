#include "pareto/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace pareto {
namespace {

using Column = std::vector<int>;  // sorted row positions

void add_into(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

// Standard Z/2 column reduction with clearing over cells in filtration order.
// Returns, per position, the position of the column that kills it (or -1),
// and marks columns that reduced to a pivot.
struct Reduction {
  std::vector<int> killer;    // row position -> column position
  std::vector<char> negative; // column reduced to a nonzero column
};

Reduction reduce(const SampledModel& model, const std::vector<int>& order) {
  const size_t n = order.size();
  std::unordered_map<int, int> pos;
  pos.reserve(n * 2);
  for (size_t k = 0; k < n; ++k) pos.emplace(order[k], static_cast<int>(k));

  Reduction out;
  out.killer.assign(n, -1);
  out.negative.assign(n, 0);
  std::vector<char> cleared(n, 0);
  std::vector<Column> reduced(n);
  Column scratch;
  int top = 0;
  for (int c : order) top = std::max(top, model.dim(c));
  for (int d = top; d >= 1; --d) {
    for (size_t j = 0; j < n; ++j) {
      if (model.dim(order[j]) != d || cleared[j]) continue;
      Column col;
      for (int b : model.boundary(order[j])) col.push_back(pos.at(b));
      std::sort(col.begin(), col.end());
      while (!col.empty()) {
        const int low = col.back();
        const int other = out.killer[static_cast<size_t>(low)];
        if (other < 0) break;
        add_into(col, reduced[static_cast<size_t>(other)], scratch);
      }
      if (col.empty()) continue;
      const int low = col.back();
      out.killer[static_cast<size_t>(low)] = static_cast<int>(j);
      out.negative[j] = 1;
      cleared[static_cast<size_t>(low)] = 1;
      reduced[j] = std::move(col);
    }
  }
  return out;
}

std::vector<int> by_dim(const SampledModel& model, std::vector<int> cells) {
  std::stable_sort(cells.begin(), cells.end(), [&](int a, int b) {
    return model.dim(a) != model.dim(b) ? model.dim(a) < model.dim(b) : a < b;
  });
  return cells;
}

}  // namespace

int SampledModel::add_vertex(Vec2 v) {
  dim_.push_back(0);
  boundary_.emplace_back();
  value_.push_back(v);
  return static_cast<int>(dim_.size()) - 1;
}

int SampledModel::add_cell(int d, std::vector<int> boundary) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "use add_vertex for 0-cells");
  Vec2 v{-INFINITY, -INFINITY};
  for (int b : boundary) {
    if (b < 0 || static_cast<size_t>(b) >= dim_.size() || dim_[static_cast<size_t>(b)] != d - 1)
      throw Error(ErrorCode::InvalidInput, "boundary of a " + std::to_string(d) + "-cell must list existing " +
                                               std::to_string(d - 1) + "-cells");
    v.x = std::max(v.x, value_[static_cast<size_t>(b)].x);
    v.y = std::max(v.y, value_[static_cast<size_t>(b)].y);
  }
  std::sort(boundary.begin(), boundary.end());
  dim_.push_back(d);
  boundary_.push_back(std::move(boundary));
  value_.push_back(v);
  return static_cast<int>(dim_.size()) - 1;
}

int SampledModel::top_dim() const {
  int t = -1;
  for (int d : dim_) t = std::max(t, d);
  return t;
}

bool SampledModel::boundary_squared_zero() const {
  Column acc, scratch;
  for (size_t c = 0; c < size(); ++c) {
    acc.clear();
    for (int b : boundary_[c]) add_into(acc, boundary_[static_cast<size_t>(b)], scratch);
    if (!acc.empty()) return false;
  }
  return true;
}

std::vector<int> sublevel_complex(const SampledModel& model, Vec2 ab) {
  std::vector<int> cells;
  for (size_t c = 0; c < model.size(); ++c)
    if (poset_leq(model.value(static_cast<int>(c)), ab)) cells.push_back(static_cast<int>(c));
  return by_dim(model, std::move(cells));
}

PoincarePolynomial betti(const SampledModel& model, const std::vector<int>& cells) {
  const auto order = by_dim(model, cells);
  const Reduction r = reduce(model, order);
  std::vector<int> b;
  for (size_t k = 0; k < order.size(); ++k) {
    if (r.negative[k] || r.killer[k] >= 0) continue;
    const auto d = static_cast<size_t>(model.dim(order[k]));
    if (b.size() <= d) b.resize(d + 1, 0);
    ++b[d];
  }
  return PoincarePolynomial(std::move(b));
}

std::vector<PoincarePolynomial> region_polynomials(const SampledModel& model, const Arrangement& arr) {
  std::vector<PoincarePolynomial> out;
  for (const auto& f : arr.faces) out.push_back(betti(model, sublevel_complex(model, f.sample)));
  return out;
}

int pbn_oracle(const SampledModel& model, Vec2 lo, Vec2 hi, int q) {
  if (!poset_leq(lo, hi)) throw Error(ErrorCode::Order, "persistent Betti number needs lo <= hi");
  std::vector<int> lower, upper;
  for (size_t c = 0; c < model.size(); ++c) {
    const Vec2 v = model.value(static_cast<int>(c));
    if (poset_leq(v, lo)) lower.push_back(static_cast<int>(c));
    else if (poset_leq(v, hi)) upper.push_back(static_cast<int>(c));
  }
  auto order = by_dim(model, lower);
  const size_t split = order.size();
  const auto rest = by_dim(model, upper);
  order.insert(order.end(), rest.begin(), rest.end());
  const Reduction r = reduce(model, order);
  int count = 0;
  for (size_t k = 0; k < split; ++k)
    if (model.dim(order[k]) == q && !r.negative[k] && r.killer[k] < 0) ++count;
  return count;
}

SampledModel product_model(const SampledModel& a, const SampledModel& b,
                           const std::function<Vec2(int, int)>& value) {
  SampledModel out;
  out.name = a.name + "x" + b.name;
  const size_t nb = b.size();
  std::vector<int> id(a.size() * nb, -1);
  // Build in order of total dimension so boundaries exist before their cofaces.
  const int top = a.top_dim() + b.top_dim();
  for (int d = 0; d <= top; ++d) {
    for (size_t i = 0; i < a.size(); ++i) {
      for (size_t j = 0; j < nb; ++j) {
        if (a.dim(static_cast<int>(i)) + b.dim(static_cast<int>(j)) != d) continue;
        if (d == 0) {
          id[i * nb + j] = out.add_vertex(value(static_cast<int>(i), static_cast<int>(j)));
          continue;
        }
        std::vector<int> bd;
        for (int x : a.boundary(static_cast<int>(i))) bd.push_back(id[static_cast<size_t>(x) * nb + j]);
        for (int y : b.boundary(static_cast<int>(j))) bd.push_back(id[i * nb + static_cast<size_t>(y)]);
        id[i * nb + j] = out.add_cell(d, std::move(bd));
      }
    }
  }
  return out;
}

SampledModel octahedron_model() {
  SampledModel m;
  m.name = "octahedron";
  const Vec2 pos[6] = {{1, 0.1}, {-1, -0.1}, {0.1, 1}, {-0.1, -1}, {0.05, 0.02}, {-0.05, -0.02}};
  int v[6];
  for (int k = 0; k < 6; ++k) v[k] = m.add_vertex(pos[k]);
  // Vertices 0..3 form the equator, 4 and 5 are the poles.
  const int ring[4] = {0, 2, 1, 3};
  int eq[4], up[4], dn[4];
  for (int k = 0; k < 4; ++k) eq[k] = m.add_cell(1, {v[ring[k]], v[ring[(k + 1) % 4]]});
  for (int k = 0; k < 4; ++k) up[k] = m.add_cell(1, {v[ring[k]], v[4]});
  for (int k = 0; k < 4; ++k) dn[k] = m.add_cell(1, {v[ring[k]], v[5]});
  for (int k = 0; k < 4; ++k) {
    m.add_cell(2, {eq[k], up[k], up[(k + 1) % 4]});
    m.add_cell(2, {eq[k], dn[k], dn[(k + 1) % 4]});
  }
  return m;
}

SampledModel klein_square_model() {
  // 3x3 grid on the unit square with (x, 0) ~ (x, 1) and (0, y) ~ (1, 1 - y).
  SampledModel m;
  m.name = "klein";
  constexpr int N = 3;
  int v[N][N], h[N][N], e[N][N];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) v[i][j] = m.add_vertex({double(i), double(j)});
  auto vert = [&](int i, int j) {
    j = ((j % N) + N) % N;
    if (i == N) return v[0][(N - j) % N];
    return v[i][j];
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      h[i][j] = m.add_cell(1, {vert(i, j), vert(i + 1, j)});
      e[i][j] = m.add_cell(1, {vert(i, j), vert(i, j + 1)});
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const int right = i + 1 < N ? e[i + 1][j] : e[0][((N - 1 - j) % N + N) % N];
      m.add_cell(2, {h[i][j], h[i][(j + 1) % N], e[i][j], right});
    }
  return m;
}

SampledModel sphere_model(int rings, int longitudes, const std::function<Vec2(double, double, double)>& value) {
  if (rings < 1 || longitudes < 3) throw Error(ErrorCode::InvalidInput, "sphere model too coarse");
  SampledModel m;
  m.name = "sphere";
  const double pi = std::numbers::pi;
  const int south = m.add_vertex(value(0, 0, -1));
  const int north = m.add_vertex(value(0, 0, 1));
  std::vector<std::vector<int>> ring(static_cast<size_t>(rings));
  for (int r = 0; r < rings; ++r) {
    const double polar = pi * (r + 1) / (rings + 1);
    const double z = -std::cos(polar), rho = std::sin(polar);
    const double twist = (r % 2) * pi / longitudes * 0.5;
    for (int k = 0; k < longitudes; ++k) {
      const double a = 2.0 * pi * k / longitudes + twist;
      ring[static_cast<size_t>(r)].push_back(m.add_vertex(value(rho * std::cos(a), rho * std::sin(a), z)));
    }
  }
  auto at = [&](int r, int k) { return ring[static_cast<size_t>(r)][static_cast<size_t>((k + longitudes) % longitudes)]; };
  std::vector<std::vector<int>> around(static_cast<size_t>(rings)), up(static_cast<size_t>(rings + 1));
  for (int r = 0; r < rings; ++r)
    for (int k = 0; k < longitudes; ++k) around[static_cast<size_t>(r)].push_back(m.add_cell(1, {at(r, k), at(r, k + 1)}));
  for (int k = 0; k < longitudes; ++k) up[0].push_back(m.add_cell(1, {south, at(0, k)}));
  for (int r = 0; r + 1 < rings; ++r)
    for (int k = 0; k < longitudes; ++k) up[static_cast<size_t>(r + 1)].push_back(m.add_cell(1, {at(r, k), at(r + 1, k)}));
  for (int k = 0; k < longitudes; ++k) up[static_cast<size_t>(rings)].push_back(m.add_cell(1, {at(rings - 1, k), north}));
  auto E = [&](std::vector<std::vector<int>>& v, int r, int k) {
    return v[static_cast<size_t>(r)][static_cast<size_t>((k + longitudes) % longitudes)];
  };
  for (int k = 0; k < longitudes; ++k) m.add_cell(2, {E(up, 0, k), E(up, 0, k + 1), E(around, 0, k)});
  for (int r = 0; r + 1 < rings; ++r)
    for (int k = 0; k < longitudes; ++k)
      m.add_cell(2, {E(around, r, k), E(around, r + 1, k), E(up, r + 1, k), E(up, r + 1, k + 1)});
  for (int k = 0; k < longitudes; ++k)
    m.add_cell(2, {E(up, rings, k), E(up, rings, k + 1), E(around, rings - 1, k)});
  return m;
}

SampledModel circle_model(int vertices, const std::function<Vec2(double, double)>& value) {
  if (vertices < 3) throw Error(ErrorCode::InvalidInput, "circle model too coarse");
  SampledModel m;
  m.name = "circle";
  std::vector<int> v;
  for (int k = 0; k < vertices; ++k) {
    const double a = 2.0 * std::numbers::pi * k / vertices;
    v.push_back(m.add_vertex(value(std::cos(a), std::sin(a))));
  }
  for (int k = 0; k < vertices; ++k) m.add_cell(1, {v[static_cast<size_t>(k)], v[static_cast<size_t>((k + 1) % vertices)]});
  return m;
}

SampledModel sphere_projection_model(int rings, int longitudes) {
  auto m = sphere_model(rings, longitudes, [](double x, double y, double) { return Vec2{x, y}; });
  m.name = "sphere-projection";
  return m;
}

SampledModel rotational_model(const RotationalSpec& spec, int theta_steps, int rings, int longitudes) {
  if (spec.radii.size() != 2 || spec.indices.size() != 2 || spec.indices[0] != 0 ||
      spec.indices[1] != spec.fiber_dim || !(spec.radii[0] < spec.radii[1]))
    throw Error(ErrorCode::InvalidInput, "rotational model needs radii c1 < c2 with indices (0, m)");
  const double mid = 0.5 * (spec.radii[0] + spec.radii[1]);
  const double amp = 0.5 * (spec.radii[1] - spec.radii[0]);
  // Heights of the fiber vertices; the value closure only sees z.
  std::vector<double> height;
  SampledModel fiber;
  if (spec.fiber_dim == 2) {
    fiber = sphere_model(rings, longitudes, [&](double, double, double z) {
      height.push_back(mid + amp * z);
      return Vec2{};
    });
  } else if (spec.fiber_dim == 1) {
    fiber = circle_model(longitudes, [&](double, double y) {
      height.push_back(mid + amp * y);
      return Vec2{};
    });
  } else {
    throw Error(ErrorCode::InvalidInput, "rotational model supports fiber dimension 1 or 2");
  }
  const SampledModel base = circle_model(theta_steps, [](double, double) { return Vec2{}; });
  auto m = product_model(base, fiber, [&](int a, int b) {
    const double t = 2.0 * std::numbers::pi * a / theta_steps;
    const double g = height[static_cast<size_t>(b)];
    return Vec2{g * std::cos(t), g * std::sin(t)};
  });
  m.name = "rotational";
  return m;
}

SampledModel klein_bottle_model(int theta_steps, int p_steps, const std::function<Vec2(double, double)>& value) {
  if (theta_steps < 3 || p_steps < 3) throw Error(ErrorCode::InvalidInput, "klein model too coarse");
  const int N = theta_steps, P = p_steps;
  const double pi = std::numbers::pi;
  SampledModel m;
  m.name = "klein";
  std::vector<int> v(static_cast<size_t>(N * P)), h(v.size()), e(v.size());
  auto at = [&](int i, int j) { return static_cast<size_t>(i * P + j); };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < P; ++j) v[at(i, j)] = m.add_vertex(value(2.0 * pi * i / N, 2.0 * pi * j / P));
  auto vert = [&](int i, int j) {
    j = ((j % P) + P) % P;
    if (i == N) return v[at(0, (P - j) % P)];
    return v[at(i, j)];
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < P; ++j) {
      h[at(i, j)] = m.add_cell(1, {vert(i, j), vert(i + 1, j)});
      e[at(i, j)] = m.add_cell(1, {vert(i, j), vert(i, j + 1)});
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < P; ++j) {
      const int right = i + 1 < N ? e[at(i + 1, j)] : e[at(0, ((P - 1 - j) % P + P) % P)];
      m.add_cell(2, {h[at(i, j)], h[at(i, (j + 1) % P)], e[at(i, j)], right});
    }
  return m;
}

SampledModel klein_projection_model(int theta_steps, int p_steps) {
  // Offset theta so no sample lands on a fold tangency.
  auto m = klein_bottle_model(theta_steps, p_steps, [](double t, double p) {
    const double th = t + 0.0005;
    const double r = klein_radius(th, p);
    return Vec2{r * std::cos(th), r * std::sin(th)};
  });
  m.name = "klein-projection";
  return m;
}

}  // namespace pareto
