#include "renyi/quantum_entropy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "renyi/error.hpp"
#include "renyi/tolerances.hpp"

namespace renyi {

DensityMatrix::DensityMatrix(HermitianMatrix m, std::optional<BipartiteDims> dims)
    : m_(std::move(m)), spectrum_(spectral_decompose(m_)), dims_(dims) {
  const PsdClass cls = classify_psd(spectrum_);
  if (cls.kind == Definiteness::Indefinite)
    throw Error(ErrorCode::NotPsd,
                "density matrix has eigenvalue " + std::to_string(cls.min_eigenvalue), "matrix");
  if (std::abs(m_.trace() - 1.0) > tol::kTrace)
    throw Error(ErrorCode::NotDensity, "density matrix trace is " + std::to_string(m_.trace()), "matrix");
  if (dims_ && dims_->a * dims_->b != m_.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "dims " + std::to_string(dims_->a) + "x" + std::to_string(dims_->b) +
                    " do not match matrix dimension " + std::to_string(m_.dim()),
                "dims");
  spectrum_.eigenvalues = clipped_eigenvalues(spectrum_);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(HermitianMatrix::identity(dim).scaled(1.0 / static_cast<double>(dim)));
}

bool DensityMatrix::positive_definite() const {
  return classify_psd(spectrum_).kind == Definiteness::PositiveDefinite;
}

std::vector<double> DensityMatrix::support_eigenvalues() const {
  std::vector<double> out = spectrum_.eigenvalues;
  for (auto& x : out)
    if (x <= tol::kZero) x = 0.0;
  return out;
}

HermitianMatrix DensityMatrix::power(double r) const { return matrix_power(spectrum_, r); }

DensityMatrix DensityMatrix::with_dims(BipartiteDims dims) const {
  if (dims.a * dims.b != dim())
    throw Error(ErrorCode::DimensionMismatch, "dims do not match matrix dimension", "dims");
  DensityMatrix copy = *this;
  copy.dims_ = dims;
  return copy;
}

namespace {

void check_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw Error(ErrorCode::AlphaOutOfRange, "alpha must be positive", "alpha");
}

double log_in(double x, Units units) { return units == Units::Bits ? std::log2(x) : std::log(x); }

}  // namespace

EntropyValue quantum_renyi_entropy(const DensityMatrix& rho, double alpha, Units units) {
  check_alpha(alpha);
  const std::vector<double> lambda = rho.support_eigenvalues();
  double h = 0.0;
  if (std::abs(alpha - 1.0) < tol::kBetaOne) {
    for (double x : lambda)
      if (x > 0.0) h -= x * log_in(x, units);
  } else {
    double s = 0.0;
    for (double x : lambda)
      if (x > 0.0) s += std::pow(x, alpha);
    h = log_in(s, units) / (1.0 - alpha);
  }
  return {h, units, alpha};
}

T3Report t3_bound(const DensityMatrix& rho, double alpha, Units units) {
  check_alpha(alpha);
  if (std::abs(alpha - 1.0) < tol::kBetaOne)
    throw Error(ErrorCode::AlphaOne, "the spectral bound needs alpha != 1", "alpha");

  T3Report r{};
  r.entropy = quantum_renyi_entropy(rho, alpha, units).value;
  double log_sum = 0.0;
  std::size_t support = 0;
  for (double x : rho.support_eigenvalues()) {
    if (x > 0.0) {
      log_sum += log_in(x, units);
      ++support;
    }
  }
  r.zero_count = rho.dim() - support;
  const double m = static_cast<double>(support);
  r.bound = (log_in(m, units) + alpha / m * log_sum) / (1.0 - alpha);
  r.log_dim = log_in(static_cast<double>(rho.dim()), units);

  r.spectral = alpha < 1.0 ? make_bound_report("t3_bound <= H_alpha", r.bound, r.entropy, tol::kChain)
                           : make_bound_report("H_alpha <= t3_bound", r.entropy, r.bound, tol::kChain);
  r.spectral.equality = tight(r.spectral.lhs, r.spectral.rhs, tol::kEquality);
  r.cap = make_bound_report("H_alpha <= log d", r.entropy, r.log_dim, tol::kChain);
  r.cap.equality = tight(r.entropy, r.log_dim, tol::kEquality);
  if (alpha < 1.0) {
    r.sandwich = make_chain_report("t3_bound <= H_alpha <= log d", r.bound, r.entropy, r.log_dim, tol::kChain);
    r.sandwich->equality = r.spectral.equality || r.cap.equality;
  }
  return r;
}

}  // namespace renyi
