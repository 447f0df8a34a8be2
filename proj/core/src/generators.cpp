#include "renyi/generators.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "renyi/error.hpp"

namespace renyi {

namespace {

Rng stream(Seed seed) { return Rng(substream(seed, 0)); }

// dim x cols complex Gaussian matrix, stored padded in a dim x dim matrix
// (columns >= cols are zero).
ComplexMatrix ginibre(std::size_t dim, std::size_t cols, Rng& rng) {
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, k) = Complex(re, im);
    }
  return g;
}

}  // namespace

DensityMatrix random_density(std::size_t dim, Rng& rng, std::optional<std::size_t> rank) {
  const std::size_t r = rank.value_or(dim);
  if (dim == 0 || r < 1 || r > dim)
    throw Error(ErrorCode::BadRank, "rank must lie in [1, dim]", "rank");
  const ComplexMatrix g = ginibre(dim, r, rng);
  HermitianMatrix w = hermitian_part(g * g.adjoint());
  return DensityMatrix(w.scaled(1.0 / w.trace()));
}

DensityMatrix random_density(std::size_t dim, Seed seed, std::optional<std::size_t> rank) {
  Rng rng = stream(seed);
  return random_density(dim, rng, rank);
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  return spectral_decompose(hermitian_part(g * g.adjoint())).eigenvectors;
}

HermitianMatrix random_pd(std::size_t dim, Rng& rng, double condition_cap) {
  if (!(condition_cap >= 1.0))
    throw Error(ErrorCode::DomainError, "condition cap must be >= 1", "cap");
  const double lo = 1.0 / std::sqrt(condition_cap);
  const double hi = std::sqrt(condition_cap);
  std::vector<double> lambda(dim);
  for (double& x : lambda) x = rng.uniform(lo, hi);
  const ComplexMatrix v = random_unitary(dim, rng);
  return SpectralDecomposition{std::move(lambda), v}.reconstruct();
}

HermitianMatrix random_pd(std::size_t dim, Seed seed, double condition_cap) {
  Rng rng = stream(seed);
  return random_pd(dim, rng, condition_cap);
}

ProbabilityVector random_simplex(std::size_t n, Rng& rng, std::size_t zeros) {
  if (n == 0 || zeros >= n)
    throw Error(ErrorCode::BadZeros, "zeros must be smaller than n", "zeros");
  std::vector<double> p(n, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n - zeros; ++i) total += (p[i] = -std::log(rng.uniform_open()));
  for (std::size_t i = 0; i < n - zeros; ++i) p[i] /= total;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return ProbabilityVector(std::move(p));
}

ProbabilityVector random_simplex(std::size_t n, Seed seed, std::size_t zeros) {
  Rng rng = stream(seed);
  return random_simplex(n, rng, zeros);
}

HermitianMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      h(i, j) = Complex(re, im) / std::sqrt(2.0);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return HermitianMatrix(std::move(h));
}

}  // namespace renyi
