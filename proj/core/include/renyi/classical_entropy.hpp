#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "renyi/bound_report.hpp"

namespace renyi {

// Element of the probability simplex. Entries in [-1e-12, 0) are clipped to
// zero; anything more negative, non-finite, or a sum off by more than 1e-10
// is rejected.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);

  std::size_t size() const noexcept { return p_.size(); }
  std::span<const double> values() const noexcept { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

struct SupportStats {
  std::size_t n = 0;
  std::size_t n0 = 0;            // entries <= zero threshold
  std::vector<double> support;   // remaining entries, input order
};

SupportStats support_stats(std::span<const double> p);

// Positive order parameter. Construction rejects beta <= 0 and non-finite values.
class BetaOrder {
 public:
  explicit BetaOrder(double beta);
  double value() const noexcept { return beta_; }
  bool is_one() const noexcept;

 private:
  double beta_;
};

// (2^(1-beta) - 1)^-1 [x^beta + (1-x)^beta - 1].
double info_function_beta(double x, BetaOrder beta);

// Closed form (2^(1-beta) - 1)^-1 (sum p_i^beta - 1).
double entropy_type_beta(const ProbabilityVector& p, BetaOrder beta);

// Recursive definition sum_{i>=2} s_i^beta f(p_i / s_i), s_i = p_1 + ... + p_i,
// in input order. Used as an independent check of the closed form.
double entropy_type_beta_chain(const ProbabilityVector& p, BetaOrder beta);

// Renyi entropy of order beta in bits; Shannon entropy at beta = 1.
double renyi_entropy(const ProbabilityVector& p, BetaOrder beta);

// (1-beta)^-1 (log2(n - n0) + beta/(n - n0) sum log2 p'_i). Lower bound on
// renyi_entropy for beta < 1, upper bound for beta > 1.
double t1_bound(const ProbabilityVector& p, BetaOrder beta);

// (2^(1-beta) - 1)^-1 [(n - n0) (prod p'_i)^(beta/(n - n0)) - 1], 0 < beta < 1.
double type_beta_upper_bound(const ProbabilityVector& p, BetaOrder beta);

// Type-beta entropy to order-beta entropy (bits).
double order_from_type(double h_type, BetaOrder beta);

// renyi_entropy vs t1_bound in the direction fixed by beta.
BoundReport t1_check(const ProbabilityVector& p, BetaOrder beta);

// 0 <= entropy_type_beta <= type_beta_upper_bound.
BoundReport t2_2_check(const ProbabilityVector& p, BetaOrder beta);

}  // namespace renyi
