#include "renyi/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace renyi {

namespace {

using Point = std::vector<double>;

// c + t (x - c)
Point along(const Point& c, const Point& x, double t) {
  Point out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] + t * (x[i] - c[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> start, const NelderMeadOptions& options) {
  auto eval = [&f](const Point& x) {
    const double v = f(x);
    return std::isnan(v) ? INFINITY : v;
  };

  const std::size_t n = start.size();
  std::vector<Point> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  NelderMeadResult result;
  int iteration = 0;
  for (;; ++iteration) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n > 0 ? n - 1 : 0];

    const double spread = values[worst] - values[best];
    if (n == 0 || spread <= options.spread_tolerance) {
      result.converged = true;
      break;
    }
    if (iteration >= options.max_iterations) break;

    Point centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const Point& x = simplex[order[k]];
      for (std::size_t i = 0; i < n; ++i) centroid[i] += x[i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const Point reflected = along(centroid, simplex[worst], -1.0);
    const double f_reflected = eval(reflected);

    if (f_reflected < values[best]) {
      Point expanded = along(centroid, simplex[worst], -2.0);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = std::move(expanded);
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    const bool outside = f_reflected < values[worst];
    Point contracted = outside ? along(centroid, reflected, 0.5) : along(centroid, simplex[worst], 0.5);
    const double f_contracted = eval(contracted);
    if (outside ? f_contracted <= f_reflected : f_contracted < values[worst]) {
      simplex[worst] = std::move(contracted);
      values[worst] = f_contracted;
      continue;
    }

    const Point anchor = simplex[best];
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == best) continue;
      simplex[k] = along(anchor, simplex[k], 0.5);
      values[k] = eval(simplex[k]);
    }
  }

  const auto it = std::min_element(values.begin(), values.end());
  result.x = simplex[static_cast<std::size_t>(it - values.begin())];
  result.value = *it;
  result.iterations = iteration;
  return result;
}

}  // namespace renyi
