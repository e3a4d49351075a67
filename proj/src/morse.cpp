#include "pareto/morse.hpp"

#include <algorithm>
#include <sstream>

namespace pareto {
namespace {

std::string poly_string(const std::vector<int>& q) {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < q.size(); ++k) {
    if (q[k] == 0) continue;
    if (!first) out << (q[k] > 0 ? "+" : "");
    first = false;
    if (k == 0 || (q[k] != 1 && q[k] != -1)) out << q[k];
    else if (q[k] == -1) out << '-';
    if (k >= 1) out << 't';
    if (k > 1) out << '^' << k;
  }
  return first ? "0" : out.str();
}

int alternating(const std::vector<int>& v, size_t upto) {
  int s = 0;
  for (size_t i = 0; i <= upto && i < v.size(); ++i) s += ((upto - i) % 2 == 0 ? 1 : -1) * v[i];
  return s;
}

}  // namespace

std::vector<int> handle_counts(const PersistencePath& path) {
  std::vector<int> c;
  for (const auto& x : path.crossings) {
    if (c.size() <= static_cast<size_t>(x.cell_dim)) c.resize(static_cast<size_t>(x.cell_dim) + 1, 0);
    ++c[static_cast<size_t>(x.cell_dim)];
  }
  return c;
}

ConleyResult morse_conley(const std::vector<int>& c, const PoincarePolynomial& p, int n) {
  ConleyResult r;
  std::vector<int> d(std::max(c.size(), p.coeffs().size()), 0);
  for (size_t k = 0; k < d.size(); ++k) d[k] = (k < c.size() ? c[k] : 0) - p.coeff(static_cast<int>(k));
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (n >= 0 && static_cast<int>(c.size()) > n + 1) {
    r.detail = "handle of dimension above n";
    return r;
  }
  if (d.empty()) {
    r.ok = true;
    return r;
  }
  // Synthetic division by (1 + t), from the top coefficient down.
  const size_t m = d.size() - 1;
  std::vector<int> q(m, 0);
  int carry = 0;
  for (size_t k = m; k >= 1; --k) {
    q[k - 1] = d[k] - carry;
    carry = q[k - 1];
  }
  const int remainder = d[0] - carry;
  while (!q.empty() && q.back() == 0) q.pop_back();
  r.Q = q;
  if (remainder != 0) {
    r.detail = "remainder " + std::to_string(remainder) + " after division by 1+t";
    return r;
  }
  for (int x : q)
    if (x < 0) {
      r.detail = "negative coefficient in Q = " + poly_string(q);
      return r;
    }
  r.ok = true;
  return r;
}

Inequalities inequalities(const std::vector<int>& c, const PoincarePolynomial& p, int n) {
  Inequalities out;
  const auto& b = p.coeffs();
  out.euler = alternating(c, std::max(c.size(), b.size()) * 2) == alternating(b, std::max(c.size(), b.size()) * 2);
  for (int k = 0; k <= n; ++k) {
    const int ck = k < static_cast<int>(c.size()) ? c[static_cast<size_t>(k)] : 0;
    out.weak.push_back(ck >= p.coeff(k));
    out.strong.push_back(alternating(c, static_cast<size_t>(k)) >= alternating(b, static_cast<size_t>(k)));
  }
  return out;
}

MorseReport morse_report(const PersistencePath& path, const PoincarePolynomial& p, int n) {
  MorseReport r;
  r.c = handle_counts(path);
  r.conley = morse_conley(r.c, p, n);
  r.chi = p.euler_characteristic();
  for (size_t j = 0; j < r.c.size(); ++j) r.chi_handles += (j % 2 == 0 ? 1 : -1) * r.c[j];
  r.ineq = inequalities(r.c, p, n);
  r.weak_ok = std::all_of(r.ineq.weak.begin(), r.ineq.weak.end(), [](bool b) { return b; });
  r.strong_ok = std::all_of(r.ineq.strong.begin(), r.ineq.strong.end(), [](bool b) { return b; });
  return r;
}

std::string format_report(const MorseReport& r) {
  std::ostringstream out;
  out << "j   c_j  weak  strong\n";
  for (size_t j = 0; j < r.ineq.weak.size(); ++j)
    out << j << "   " << (j < r.c.size() ? r.c[j] : 0) << "    " << (r.ineq.weak[j] ? "ok" : "FAIL") << "    "
        << (r.ineq.strong[j] ? "ok" : "FAIL") << '\n';
  out << "Q(t) = " << (r.conley.ok || !r.conley.Q.empty() ? poly_string(r.conley.Q) : "-");
  if (!r.conley.ok) out << "  (fails: " << r.conley.detail << ')';
  out << '\n';
  out << "chi = " << r.chi << ", alternating handle sum = " << r.chi_handles << (r.ineq.euler ? "  ok" : "  FAIL") << '\n';
  return out.str();
}

}  // namespace pareto
