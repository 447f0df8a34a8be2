#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "renyi/bound_report.hpp"
#include "renyi/matrix.hpp"
#include "renyi/nelder_mead.hpp"
#include "renyi/quantum_entropy.hpp"

namespace renyi {

// All divergences are in nats.
struct DivergenceResult {
  double value;
  double alpha;
  bool equality_case;  // sigma^(1-alpha) proportional to rho^alpha (alpha > 1 only)
};

// (alpha - 1)^-1 ln tr(rho^alpha sigma^(1-alpha)). sigma is any PSD matrix
// (unit trace not required); for alpha > 1 it must be PD.
DivergenceResult renyi_relative_entropy(const DensityMatrix& rho, const HermitianMatrix& sigma,
                                        double alpha);

// (alpha-1)^-1 ln tr(sigma^(1-alpha)), the divergence of the identity from sigma.
double identity_divergence(const HermitianMatrix& sigma, double alpha);

// H_alpha(A) written as -D_alpha(rho_A || I_A).
double entropy_from_identity_divergence(const DensityMatrix& rho, double alpha);

struct EqualityCondition {
  bool holds;
  double c;  // tr(sigma^(1-alpha)) / tr(rho^alpha)
};

EqualityCondition equality_condition_check(const DensityMatrix& rho, const HermitianMatrix& sigma,
                                           double alpha);

// (alpha-1)^-1 (ln d + (alpha/d) ln det rho + ((1-alpha)/d) ln det sigma) <= D_alpha.
BoundReport t4_lower_bound(const DensityMatrix& rho, const HermitianMatrix& sigma, double alpha);

// D(rho||sigma) <= D(rho||I) + D(I||sigma).
BoundReport triangle_bound_check(const DensityMatrix& rho, const HermitianMatrix& sigma, double alpha);

// --- Minimization over sigma_B ----------------------------------------------

struct OptimizerOptions {
  int restarts = 5;  // restart 0 starts at H = 0, the rest at seeded Gaussian draws
  std::uint64_t seed = 0x5eedULL;
  NelderMeadOptions nelder_mead{};
  // Called with every objective evaluation (value, sigma_B).
  std::function<void(double, const HermitianMatrix&)> probe;
};

struct OptimizationOutcome {
  double optimum_value;
  DensityMatrix optimizer_sigma;
  int iterations;
  int restarts_used;
  bool converged;
};

struct OptimizedValue {
  double value;
  OptimizationOutcome outcome;
};

// sigma_B = exp(H) / tr exp(H) for H Hermitian built from d_B^2 real
// parameters: the diagonal, then (re, im) of each upper off-diagonal entry.
HermitianMatrix sigma_from_parameters(std::span<const double> params, std::size_t dim_b);

// min over sigma_B of D_alpha(rho_AB || reference_A (x) sigma_B), alpha > 1.
OptimizationOutcome minimize_over_sigma_b(const DensityMatrix& rho_ab, const HermitianMatrix& reference_a,
                                          double alpha, const OptimizerOptions& options = {});

// ln d_A - min D_alpha(rho_AB || mu_A (x) sigma_B).
OptimizedValue conditional_entropy(const DensityMatrix& rho_ab, double alpha,
                                   const OptimizerOptions& options = {});

// min D_alpha(rho_AB || rho_A (x) sigma_B).
OptimizedValue mutual_information(const DensityMatrix& rho_ab, double alpha,
                                  const OptimizerOptions& options = {});

enum class T5Mode { Conditional, Mutual };

struct ClosedFormValue {
  double value;
  double c;
  HermitianMatrix sigma_b;
};

// Closed form when reference_A^(1-alpha) (x) sigma_B^(1-alpha) = c rho_AB^alpha
// is solvable for some sigma_B; absent otherwise.
std::optional<ClosedFormValue> t5_closed_form(const DensityMatrix& rho_ab, double alpha, T5Mode mode);

// (alpha/(alpha-1)) (ln(d_A d_B) + ln det rho_AB / (d_A d_B)).
double t6_bound_value(const DensityMatrix& rho_ab, double alpha);

// mutual_information >= t6 bound - opt_tol. Runs the optimizer.
BoundReport t6_lower_bound(const DensityMatrix& rho_ab, double alpha, const OptimizerOptions& options = {});
BoundReport t6_lower_bound(const DensityMatrix& rho_ab, double alpha, double mutual_information_value);

}  // namespace renyi
