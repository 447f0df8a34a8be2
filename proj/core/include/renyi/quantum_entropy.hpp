#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "renyi/bound_report.hpp"
#include "renyi/matrix.hpp"

namespace renyi {

struct BipartiteDims {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

// PSD, unit-trace Hermitian matrix with its spectrum cached. Eigenvalues are
// stored clipped: entries in [-psd_tol, 0) become exact zeros.
class DensityMatrix {
 public:
  // Throws NotPsd, NotDensity (trace), DimensionMismatch (dims).
  explicit DensityMatrix(HermitianMatrix m, std::optional<BipartiteDims> dims = std::nullopt);

  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const noexcept { return m_.dim(); }
  const HermitianMatrix& matrix() const noexcept { return m_; }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  const std::optional<BipartiteDims>& dims() const noexcept { return dims_; }
  bool positive_definite() const;

  // Eigenvalues with structural zeros (<= zero threshold) flushed to 0.
  std::vector<double> support_eigenvalues() const;
  HermitianMatrix power(double r) const;

  DensityMatrix with_dims(BipartiteDims dims) const;

 private:
  HermitianMatrix m_;
  SpectralDecomposition spectrum_;
  std::optional<BipartiteDims> dims_;
};

enum class Units { Nats, Bits };

struct EntropyValue {
  double value;
  Units units;
  double alpha;
};

// (1 - alpha)^-1 log sum lambda_i^alpha from the spectrum; von Neumann
// entropy at alpha = 1. Throws AlphaOutOfRange for alpha <= 0.
EntropyValue quantum_renyi_entropy(const DensityMatrix& rho, double alpha, Units units = Units::Nats);

struct T3Report {
  double entropy;
  double bound;           // spectral bound from the support eigenvalues
  double log_dim;         // log d cap
  std::size_t zero_count; // d0
  BoundReport spectral;   // direction depends on alpha
  BoundReport cap;        // H <= log d
  std::optional<BoundReport> sandwich;  // bound <= H <= log d, alpha < 1 only
};

T3Report t3_bound(const DensityMatrix& rho, double alpha, Units units = Units::Nats);

}  // namespace renyi
