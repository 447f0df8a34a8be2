#pragma once

#include <functional>
#include <span>
#include <vector>

namespace renyi {

struct NelderMeadOptions {
  double initial_step = 0.5;
  double spread_tolerance = 1e-10;  // max f - min f over the simplex
  int max_iterations = 5000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free minimization with the standard reflection (1), expansion
// (2), contraction (1/2) and shrink (1/2) coefficients. NaN objective values
// are treated as +inf.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace renyi
