#pragma once

#include <cstddef>
#include <optional>

#include "renyi/classical_entropy.hpp"
#include "renyi/matrix.hpp"
#include "renyi/quantum_entropy.hpp"
#include "renyi/rng.hpp"

namespace renyi {

// Random instances for the property suites. Each Seed overload draws from
// Rng(substream(seed, 0)); the Rng& overloads continue an existing stream.

// G G^dagger / tr(G G^dagger), G a dim x rank complex Ginibre matrix.
DensityMatrix random_density(std::size_t dim, Seed seed, std::optional<std::size_t> rank = std::nullopt);
DensityMatrix random_density(std::size_t dim, Rng& rng, std::optional<std::size_t> rank = std::nullopt);

// V diag(lambda) V^dagger with lambda uniform in [cap^-1/2, cap^1/2] and V
// the eigenbasis of a Ginibre Wishart matrix.
HermitianMatrix random_pd(std::size_t dim, Seed seed, double condition_cap);
HermitianMatrix random_pd(std::size_t dim, Rng& rng, double condition_cap);

// Dirichlet(1, ..., 1) on n - zeros coordinates, `zeros` exact zeros,
// positions shuffled.
ProbabilityVector random_simplex(std::size_t n, Seed seed, std::size_t zeros);
ProbabilityVector random_simplex(std::size_t n, Rng& rng, std::size_t zeros);

ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
// Gaussian unitary ensemble sample (unnormalized).
HermitianMatrix random_hermitian(std::size_t dim, Rng& rng);

}  // namespace renyi
