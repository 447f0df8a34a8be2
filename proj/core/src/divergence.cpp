#include "renyi/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "renyi/error.hpp"
#include "renyi/rng.hpp"
#include "renyi/tolerances.hpp"

namespace renyi {

namespace {

void check_divergence_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw Error(ErrorCode::AlphaOutOfRange, "alpha must be >= 0", "alpha");
  if (std::abs(alpha - 1.0) < tol::kBetaOne)
    throw Error(ErrorCode::AlphaOne, "alpha = 1 is not admitted", "alpha");
}

void check_alpha_above_one(double alpha) {
  if (!std::isfinite(alpha) || !(alpha > 1.0))
    throw Error(ErrorCode::AlphaOutOfRange, "alpha must exceed 1", "alpha");
}

// sigma^(1-alpha) with the singularity checks that D_alpha needs.
HermitianMatrix reference_power(const SpectralDecomposition& sigma, double alpha) {
  const PsdClass cls = classify_psd(sigma);
  if (cls.kind == Definiteness::Indefinite)
    throw Error(ErrorCode::NotPsd, "sigma is not positive semidefinite", "sigma");
  if (alpha > 1.0 && cls.kind != Definiteness::PositiveDefinite)
    throw Error(ErrorCode::SigmaSingular, "sigma must be positive definite for alpha > 1", "sigma");
  return matrix_power(sigma, 1.0 - alpha);
}

SpectralDecomposition require_pd(const HermitianMatrix& m, const char* field) {
  SpectralDecomposition s = spectral_decompose(m);
  if (classify_psd(s).kind != Definiteness::PositiveDefinite)
    throw Error(ErrorCode::NotPd, std::string(field) + " must be positive definite", field);
  return s;
}

// tr(rho^a sigma^(1-a)) = sum_ij l_i^a m_j^(1-a) |<u_i|v_j>|^2. Every term is
// nonnegative, unlike the entrywise product of the two powers, which cancels
// badly once sigma^(1-a) is large.
double power_trace(const SpectralDecomposition& rho, double a, const SpectralDecomposition& sigma) {
  const std::size_t n = rho.eigenvalues.size();
  const std::vector<double> mu = clipped_eigenvalues(sigma);
  const ComplexMatrix overlap = rho.eigenvectors.adjoint() * sigma.eigenvectors;
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double li = spectral_pow(rho.eigenvalues[i], a);
    if (li == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) t += li * spectral_pow(mu[j], 1.0 - a) * std::norm(overlap(i, j));
  }
  return t;
}

BipartiteDims require_dims(const DensityMatrix& rho) {
  if (!rho.dims()) throw Error(ErrorCode::NotBipartite, "state carries no bipartite dimensions", "dims");
  return *rho.dims();
}

EqualityCondition proportionality(const HermitianMatrix& rho_alpha, const HermitianMatrix& sigma_power) {
  const double c = sigma_power.trace() / rho_alpha.trace();
  const double dev = max_abs_diff(sigma_power.matrix(), rho_alpha.matrix() * Complex(c));
  return {dev <= tol::kEquality * sigma_power.max_abs(), c};
}

}  // namespace

DivergenceResult renyi_relative_entropy(const DensityMatrix& rho, const HermitianMatrix& sigma, double alpha) {
  check_divergence_alpha(alpha);
  if (sigma.dim() != rho.dim())
    throw Error(ErrorCode::DimensionMismatch, "rho and sigma differ in dimension", "sigma");
  const SpectralDecomposition sigma_spec = spectral_decompose(sigma);
  const HermitianMatrix sigma_power = reference_power(sigma_spec, alpha);
  const HermitianMatrix rho_alpha = rho.power(alpha);
  const double t = power_trace(rho.spectrum(), alpha, sigma_spec);
  if (!(t > tol::kZero))
    throw Error(ErrorCode::TraceNonpositive, "tr(rho^alpha sigma^(1-alpha)) is not positive", "sigma");
  DivergenceResult r{std::log(t) / (alpha - 1.0), alpha, false};
  if (alpha > 1.0) r.equality_case = proportionality(rho_alpha, sigma_power).holds;
  return r;
}

double identity_divergence(const HermitianMatrix& sigma, double alpha) {
  check_divergence_alpha(alpha);
  const HermitianMatrix sigma_power = reference_power(spectral_decompose(sigma), alpha);
  return std::log(sigma_power.trace()) / (alpha - 1.0);
}

double entropy_from_identity_divergence(const DensityMatrix& rho, double alpha) {
  return -renyi_relative_entropy(rho, HermitianMatrix::identity(rho.dim()), alpha).value;
}

EqualityCondition equality_condition_check(const DensityMatrix& rho, const HermitianMatrix& sigma, double alpha) {
  check_alpha_above_one(alpha);
  const SpectralDecomposition s = require_pd(sigma, "sigma");
  return proportionality(rho.power(alpha), matrix_power(s, 1.0 - alpha));
}

BoundReport t4_lower_bound(const DensityMatrix& rho, const HermitianMatrix& sigma, double alpha) {
  check_alpha_above_one(alpha);
  if (!rho.positive_definite()) throw Error(ErrorCode::NotPd, "rho must be positive definite", "rho");
  const SpectralDecomposition sigma_spec = require_pd(sigma, "sigma");
  const double d = static_cast<double>(rho.dim());
  const double bound =
      (std::log(d) + alpha / d * log_det(rho.spectrum()) + (1.0 - alpha) / d * log_det(sigma_spec)) /
      (alpha - 1.0);
  const DivergenceResult div = renyi_relative_entropy(rho, sigma, alpha);
  BoundReport r = make_bound_report("t4_bound <= D_alpha", bound, div.value, tol::kChain);
  r.equality = div.equality_case;
  return r;
}

BoundReport triangle_bound_check(const DensityMatrix& rho, const HermitianMatrix& sigma, double alpha) {
  check_alpha_above_one(alpha);
  require_pd(sigma, "sigma");
  const double lhs = renyi_relative_entropy(rho, sigma, alpha).value;
  const double rho_term = -quantum_renyi_entropy(rho, alpha, Units::Nats).value;
  const double rhs = rho_term + identity_divergence(sigma, alpha);
  BoundReport r = make_bound_report("D(rho||sigma) <= D(rho||I) + D(I||sigma)", lhs, rhs, tol::kChain);
  r.equality = tight(lhs, rhs, tol::kEquality);
  return r;
}

// --- sigma_B optimization --------------------------------------------------

namespace {

HermitianMatrix hamiltonian_from_parameters(std::span<const double> params, std::size_t dim_b) {
  if (params.size() != dim_b * dim_b)
    throw Error(ErrorCode::DimensionMismatch, "expected d_B^2 parameters", "params");
  ComplexMatrix h(dim_b);
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim_b; ++i) h(i, i) = params[k++];
  for (std::size_t i = 0; i < dim_b; ++i)
    for (std::size_t j = i + 1; j < dim_b; ++j) {
      const Complex z(params[k], params[k + 1]);
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  return hermitian_part(h);
}

// Gibbs weights exp(lambda - max) / sum, ascending like the eigenvalues.
std::vector<double> gibbs_weights(const std::vector<double>& lambda) {
  const double top = lambda.back();
  std::vector<double> w(lambda.size());
  double z = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) z += (w[i] = std::exp(lambda[i] - top));
  for (double& x : w) x /= z;
  return w;
}

class SigmaObjective {
 public:
  SigmaObjective(const DensityMatrix& rho_ab, const HermitianMatrix& reference_a, double alpha)
      : alpha_(alpha),
        dim_a_(reference_a.dim()),
        dim_b_(rho_ab.dim() / reference_a.dim()),
        rho_(rho_ab.spectrum()),
        reference_(spectral_decompose(reference_a)) {
    for (double& x : rho_.eigenvalues) x = spectral_pow(x, alpha);
    for (double& x : reference_.eigenvalues) x = spectral_pow(x, 1.0 - alpha);
  }

  std::size_t dim_b() const { return dim_b_; }

  double operator()(std::span<const double> params, HermitianMatrix* sigma_out) const {
    const SpectralDecomposition h = spectral_decompose(hamiltonian_from_parameters(params, dim_b_));
    const std::vector<double> w = gibbs_weights(h.eigenvalues);
    if (sigma_out) {
      const SpectralDecomposition s{w, h.eigenvectors};
      *sigma_out = s.reconstruct();
    }
    if (w.front() <= 0.0) return INFINITY;
    // tr(rho^a (X (x) S)) in the eigenbases of rho and X (x) S; all terms are >= 0
    const ComplexMatrix overlap = rho_.eigenvectors.adjoint() * kron(reference_.eigenvectors, h.eigenvectors);
    std::vector<double> s(dim_b_);
    for (std::size_t j = 0; j < dim_b_; ++j) s[j] = std::pow(w[j], 1.0 - alpha_);
    double q = 0.0;
    for (std::size_t i = 0; i < overlap.dim(); ++i) {
      if (rho_.eigenvalues[i] == 0.0) continue;
      double row = 0.0;
      for (std::size_t k = 0; k < dim_a_; ++k)
        for (std::size_t j = 0; j < dim_b_; ++j)
          row += reference_.eigenvalues[k] * s[j] * std::norm(overlap(i, k * dim_b_ + j));
      q += rho_.eigenvalues[i] * row;
    }
    if (!(q > 0.0)) return INFINITY;
    return std::log(q) / (alpha_ - 1.0);
  }

 private:
  double alpha_;
  std::size_t dim_a_;
  std::size_t dim_b_;
  SpectralDecomposition rho_;        // eigenvalues raised to alpha
  SpectralDecomposition reference_;  // eigenvalues raised to 1 - alpha
};

}  // namespace

HermitianMatrix sigma_from_parameters(std::span<const double> params, std::size_t dim_b) {
  const SpectralDecomposition h = spectral_decompose(hamiltonian_from_parameters(params, dim_b));
  return SpectralDecomposition{gibbs_weights(h.eigenvalues), h.eigenvectors}.reconstruct();
}

OptimizationOutcome minimize_over_sigma_b(const DensityMatrix& rho_ab, const HermitianMatrix& reference_a,
                                          double alpha, const OptimizerOptions& options) {
  check_alpha_above_one(alpha);
  if (reference_a.dim() == 0 || rho_ab.dim() % reference_a.dim() != 0)
    throw Error(ErrorCode::DimensionMismatch, "reference dimension does not divide the state dimension", "dims");
  const SigmaObjective objective(rho_ab, reference_a, alpha);
  const std::size_t n_params = objective.dim_b() * objective.dim_b();

  double best_value = INFINITY;
  std::vector<double> best_params(n_params, 0.0);
  auto f = [&](std::span<const double> x) {
    HermitianMatrix sigma;
    const double v = objective(x, options.probe ? &sigma : nullptr);
    if (options.probe) options.probe(v, sigma);
    if (v < best_value) {
      best_value = v;
      best_params.assign(x.begin(), x.end());
    }
    return v;
  };

  int iterations = 0;
  bool converged = false;
  const int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> start(n_params, 0.0);
    if (r > 0) {
      Rng rng(substream(Seed{options.seed}, static_cast<std::uint64_t>(r)));
      for (double& x : start) x = rng.normal();
    }
    const NelderMeadResult res = nelder_mead(f, std::move(start), options.nelder_mead);
    iterations += res.iterations;
    converged = converged || res.converged;
  }
  if (!converged || !std::isfinite(best_value))
    throw Error(ErrorCode::OptimizerFailure, "no Nelder-Mead restart converged");

  return OptimizationOutcome{best_value, DensityMatrix(sigma_from_parameters(best_params, objective.dim_b())),
                             iterations, restarts, converged};
}

OptimizedValue conditional_entropy(const DensityMatrix& rho_ab, double alpha, const OptimizerOptions& options) {
  const BipartiteDims dims = require_dims(rho_ab);
  check_alpha_above_one(alpha);
  const HermitianMatrix mu_a = HermitianMatrix::identity(dims.a).scaled(1.0 / static_cast<double>(dims.a));
  OptimizationOutcome outcome = minimize_over_sigma_b(rho_ab, mu_a, alpha, options);
  const double value = std::log(static_cast<double>(dims.a)) - outcome.optimum_value;
  return {value, std::move(outcome)};
}

OptimizedValue mutual_information(const DensityMatrix& rho_ab, double alpha, const OptimizerOptions& options) {
  const BipartiteDims dims = require_dims(rho_ab);
  check_alpha_above_one(alpha);
  const HermitianMatrix rho_a = partial_trace_b(rho_ab.matrix(), dims.a, dims.b);
  if (classify_psd(rho_a).kind != Definiteness::PositiveDefinite)
    throw Error(ErrorCode::MarginalSingular, "marginal rho_A is singular", "state");
  OptimizationOutcome outcome = minimize_over_sigma_b(rho_ab, rho_a, alpha, options);
  const double value = outcome.optimum_value;
  return {value, std::move(outcome)};
}

std::optional<ClosedFormValue> t5_closed_form(const DensityMatrix& rho_ab, double alpha, T5Mode mode) {
  check_alpha_above_one(alpha);
  const BipartiteDims dims = require_dims(rho_ab);
  if (!rho_ab.positive_definite()) return std::nullopt;

  HermitianMatrix reference_power;
  HermitianMatrix reference_inverse;
  if (mode == T5Mode::Conditional) {
    const double da = static_cast<double>(dims.a);
    reference_power = HermitianMatrix::identity(dims.a).scaled(std::pow(da, alpha - 1.0));
    reference_inverse = HermitianMatrix::identity(dims.a).scaled(std::pow(da, 1.0 - alpha));
  } else {
    const SpectralDecomposition rho_a = spectral_decompose(partial_trace_b(rho_ab.matrix(), dims.a, dims.b));
    if (classify_psd(rho_a).kind != Definiteness::PositiveDefinite) return std::nullopt;
    reference_power = matrix_power(rho_a, 1.0 - alpha);
    reference_inverse = matrix_power(rho_a, alpha - 1.0);
  }

  // If rho^alpha = X (x) Y / c then tr_A((X^-1 (x) I) rho^alpha) / d_A = Y / c.
  const HermitianMatrix rho_alpha = rho_ab.power(alpha);
  const ComplexMatrix stripped =
      kron(reference_inverse.matrix(), ComplexMatrix::identity(dims.b)) * rho_alpha.matrix();
  const HermitianMatrix factor_b =
      partial_trace_a(hermitian_part(stripped), dims.a, dims.b).scaled(1.0 / static_cast<double>(dims.a));
  const double dev = max_abs_diff(kron(reference_power.matrix(), factor_b.matrix()), rho_alpha.matrix());
  if (dev > tol::kEquality * rho_alpha.max_abs()) return std::nullopt;

  const SpectralDecomposition factor_spec = spectral_decompose(factor_b);
  if (classify_psd(factor_spec).kind != Definiteness::PositiveDefinite) return std::nullopt;
  HermitianMatrix sigma_b = matrix_power(factor_spec, 1.0 / (1.0 - alpha));
  sigma_b = sigma_b.scaled(1.0 / sigma_b.trace());

  const HermitianMatrix sigma_power = matrix_power(sigma_b, 1.0 - alpha);
  const double c = reference_power.trace() * sigma_power.trace() / rho_alpha.trace();
  const double d = static_cast<double>(rho_ab.dim());
  const double divergence = (std::log(d) + 2.0 * alpha / d * log_det(rho_ab.spectrum()) + std::log(c)) / (alpha - 1.0);
  const double value =
      mode == T5Mode::Conditional ? std::log(static_cast<double>(dims.a)) - divergence : divergence;
  return ClosedFormValue{value, c, std::move(sigma_b)};
}

double t6_bound_value(const DensityMatrix& rho_ab, double alpha) {
  check_alpha_above_one(alpha);
  if (!rho_ab.positive_definite()) throw Error(ErrorCode::NotPd, "rho_AB must be positive definite", "state");
  const double d = static_cast<double>(rho_ab.dim());
  return alpha / (alpha - 1.0) * (std::log(d) + log_det(rho_ab.spectrum()) / d);
}

BoundReport t6_lower_bound(const DensityMatrix& rho_ab, double alpha, double mutual_information_value) {
  const double bound = t6_bound_value(rho_ab, alpha);
  BoundReport r = make_bound_report("t6_bound <= I_alpha(A;B)", bound, mutual_information_value, tol::kOptimizer);
  // Absolute slack: the optimizer tolerance is stated in nats.
  r.violation = std::max(0.0, bound - mutual_information_value);
  r.pass = r.violation <= tol::kOptimizer;
  r.equality = tight(bound, mutual_information_value, tol::kOptimizer);
  return r;
}

BoundReport t6_lower_bound(const DensityMatrix& rho_ab, double alpha, const OptimizerOptions& options) {
  t6_bound_value(rho_ab, alpha);
  return t6_lower_bound(rho_ab, alpha, mutual_information(rho_ab, alpha, options).value);
}

}  // namespace renyi
