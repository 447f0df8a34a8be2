#pragma once

#include <optional>
#include <string>

namespace renyi {

// Outcome of one inequality check of the form  lhs <= rhs  or the chain
// lhs <= mid <= rhs. `gap` is the smallest signed slack (negative when
// violated); `violation` is max(0, -gap) / (1 + |rhs|).
struct BoundReport {
  std::string relation;
  double lhs = 0.0;
  std::optional<double> mid;
  double rhs = 0.0;
  double gap = 0.0;
  double violation = 0.0;
  bool pass = false;
  bool equality = false;
  double tolerance = 0.0;
};

BoundReport make_bound_report(std::string relation, double lhs, double rhs, double tolerance);
BoundReport make_chain_report(std::string relation, double lhs, double mid, double rhs,
                              double tolerance);

// Normalized slack test used for equality flags when no structural condition
// applies: |rhs - lhs| / (1 + |rhs|) <= tolerance.
bool tight(double lhs, double rhs, double tolerance);

}  // namespace renyi
