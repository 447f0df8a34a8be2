#include "renyi/bound_report.hpp"

#include <algorithm>
#include <cmath>

namespace renyi {

BoundReport make_bound_report(std::string relation, double lhs, double rhs, double tolerance) {
  BoundReport r;
  r.relation = std::move(relation);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.violation = std::max(0.0, -r.gap) / (1.0 + std::abs(rhs));
  if (std::isnan(r.gap)) r.violation = INFINITY;
  r.pass = r.violation <= tolerance;
  r.tolerance = tolerance;
  return r;
}

BoundReport make_chain_report(std::string relation, double lhs, double mid, double rhs,
                              double tolerance) {
  BoundReport r;
  r.relation = std::move(relation);
  r.lhs = lhs;
  r.mid = mid;
  r.rhs = rhs;
  r.gap = std::min(mid - lhs, rhs - mid);
  r.violation = std::max({0.0, (lhs - mid) / (1.0 + std::abs(mid)), (mid - rhs) / (1.0 + std::abs(rhs))});
  if (std::isnan(r.gap)) r.violation = INFINITY;
  r.pass = r.violation <= tolerance;
  r.tolerance = tolerance;
  return r;
}

bool tight(double lhs, double rhs, double tolerance) {
  return std::abs(rhs - lhs) / (1.0 + std::abs(rhs)) <= tolerance;
}

}  // namespace renyi
