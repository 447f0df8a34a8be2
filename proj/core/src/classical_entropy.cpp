#include "renyi/classical_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "renyi/error.hpp"
#include "renyi/tolerances.hpp"

namespace renyi {

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw Error(ErrorCode::DomainError, "probability vector is empty", "p");
  for (std::size_t i = 0; i < p_.size(); ++i) {
    double& x = p_[i];
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "p[" + std::to_string(i) + "] is not finite", "p");
    if (x < -tol::kProbabilityClip)
      throw Error(ErrorCode::NegativeProbability, "p[" + std::to_string(i) + "] is negative", "p");
    if (x < 0.0) x = 0.0;
  }
  const double sum = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(sum - 1.0) > tol::kTrace)
    throw Error(ErrorCode::NotNormalized, "probabilities sum to " + std::to_string(sum), "p");
}

SupportStats support_stats(std::span<const double> p) {
  SupportStats s;
  s.n = p.size();
  for (double x : p) {
    if (x > tol::kZero)
      s.support.push_back(x);
    else
      ++s.n0;
  }
  return s;
}

BetaOrder::BetaOrder(double beta) : beta_(beta) {
  if (!std::isfinite(beta) || beta <= 0.0)
    throw Error(ErrorCode::BetaOutOfRange, "beta must be a positive number", "beta");
}

bool BetaOrder::is_one() const noexcept { return std::abs(beta_ - 1.0) < tol::kBetaOne; }

namespace {

void reject_one(BetaOrder beta) {
  if (beta.is_one()) throw Error(ErrorCode::BetaOne, "beta = 1 is not admitted here", "beta");
}

double type_beta_scale(double beta) { return 1.0 / (std::pow(2.0, 1.0 - beta) - 1.0); }

double power_sum(std::span<const double> p, double beta) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s += std::pow(x, beta);
  return s;
}

}  // namespace

double info_function_beta(double x, BetaOrder beta) {
  reject_one(beta);
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::DomainError, "x must lie in [0, 1]", "x");
  if (x == 0.0 || x == 1.0) return 0.0;
  if (x == 0.5) return 1.0;
  const double b = beta.value();
  return type_beta_scale(b) * (std::pow(x, b) + std::pow(1.0 - x, b) - 1.0);
}

double entropy_type_beta(const ProbabilityVector& p, BetaOrder beta) {
  reject_one(beta);
  return type_beta_scale(beta.value()) * (power_sum(p.values(), beta.value()) - 1.0);
}

double entropy_type_beta_chain(const ProbabilityVector& p, BetaOrder beta) {
  reject_one(beta);
  double s = p[0];
  double h = 0.0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    s += p[i];
    if (s <= 0.0) continue;
    const double ratio = std::min(1.0, p[i] / s);
    h += std::pow(s, beta.value()) * info_function_beta(ratio, beta);
  }
  return h;
}

double renyi_entropy(const ProbabilityVector& p, BetaOrder beta) {
  if (beta.is_one()) {
    double h = 0.0;
    for (double x : p.values())
      if (x > 0.0) h -= x * std::log2(x);
    return h;
  }
  return std::log2(power_sum(p.values(), beta.value())) / (1.0 - beta.value());
}

namespace {

SupportStats nonempty_support(const ProbabilityVector& p) {
  SupportStats s = support_stats(p.values());
  if (s.support.empty()) throw Error(ErrorCode::EmptySupport, "distribution has no nonzero entries", "p");
  return s;
}

double mean_log2(std::span<const double> support) {
  double s = 0.0;
  for (double x : support) s += std::log2(x);
  return s / static_cast<double>(support.size());
}

}  // namespace

double t1_bound(const ProbabilityVector& p, BetaOrder beta) {
  reject_one(beta);
  const SupportStats s = nonempty_support(p);
  const double b = beta.value();
  const double m = static_cast<double>(s.support.size());
  return (std::log2(m) + b * mean_log2(s.support)) / (1.0 - b);
}

double type_beta_upper_bound(const ProbabilityVector& p, BetaOrder beta) {
  const double b = beta.value();
  if (!(b > 0.0 && b < 1.0)) throw Error(ErrorCode::BetaOutOfRange, "bound is stated for 0 < beta < 1", "beta");
  const SupportStats s = nonempty_support(p);
  const double m = static_cast<double>(s.support.size());
  // (prod p')^(beta/m) = 2^(beta * mean log2 p')
  return type_beta_scale(b) * (m * std::exp2(b * mean_log2(s.support)) - 1.0);
}

double order_from_type(double h_type, BetaOrder beta) {
  reject_one(beta);
  const double b = beta.value();
  const double arg = (std::pow(2.0, 1.0 - b) - 1.0) * h_type + 1.0;
  if (!(arg > 0.0)) throw Error(ErrorCode::DomainError, "order_from_type log argument is not positive", "h_type");
  return std::log2(arg) / (1.0 - b);
}

BoundReport t1_check(const ProbabilityVector& p, BetaOrder beta) {
  const double bound = t1_bound(p, beta);
  const double h = renyi_entropy(p, beta);
  BoundReport r = beta.value() < 1.0 ? make_bound_report("t1_bound <= H_beta", bound, h, tol::kChain)
                                     : make_bound_report("H_beta <= t1_bound", h, bound, tol::kChain);
  r.equality = tight(r.lhs, r.rhs, tol::kEquality);
  return r;
}

BoundReport t2_2_check(const ProbabilityVector& p, BetaOrder beta) {
  const double upper = type_beta_upper_bound(p, beta);
  const double h = entropy_type_beta(p, beta);
  BoundReport r = make_chain_report("0 <= H^beta <= type_beta_upper_bound", 0.0, h, upper, tol::kChain);
  r.equality = tight(h, upper, tol::kEquality);
  return r;
}

}  // namespace renyi
