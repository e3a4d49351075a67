#pragma once

#include "pareto/paths.hpp"

#include <string>
#include <vector>

namespace pareto {

// c_j: crossings with cell dimension j, creating or killing.
std::vector<int> handle_counts(const PersistencePath& path);

struct ConleyResult {
  bool ok = false;
  std::vector<int> Q;  // sum c_j t^j - P(t) = (1 + t) Q(t)
  std::string detail;
};

ConleyResult morse_conley(const std::vector<int>& c, const PoincarePolynomial& p, int n = -1);

struct Inequalities {
  bool euler = false;
  std::vector<bool> weak;    // c_j >= b_j
  std::vector<bool> strong;  // alternating partial sums
};

Inequalities inequalities(const std::vector<int>& c, const PoincarePolynomial& p, int n);

struct MorseReport {
  std::vector<int> c;
  ConleyResult conley;
  int chi = 0;         // Euler characteristic of M
  int chi_handles = 0; // alternating sum of c
  Inequalities ineq;
  bool weak_ok = false, strong_ok = false;
  bool valid() const { return conley.ok && ineq.euler && weak_ok && strong_ok; }
};

MorseReport morse_report(const PersistencePath& path, const PoincarePolynomial& p, int n);

// Renders as a text table.
std::string format_report(const MorseReport& r);

}  // namespace pareto
