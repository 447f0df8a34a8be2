#include "renyi/matrix_inequalities.hpp"

#include <cmath>

#include "renyi/error.hpp"
#include "renyi/tolerances.hpp"

namespace renyi {

namespace {

SpectralDecomposition require_psd(const HermitianMatrix& m, const char* field) {
  SpectralDecomposition s = spectral_decompose(m);
  if (classify_psd(s).kind == Definiteness::Indefinite)
    throw Error(ErrorCode::NotPsd, std::string(field) + " is not positive semidefinite", field);
  return s;
}

// ln det of a PSD spectrum; -inf when singular.
double log_det_psd(const SpectralDecomposition& s) {
  double sum = 0.0;
  for (double x : clipped_eigenvalues(s)) {
    if (x <= 0.0) return -INFINITY;
    sum += std::log(x);
  }
  return sum;
}

}  // namespace

BoundReport lemma2_check(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "lemma2 operands differ in dimension", "b");
  require_psd(a, "a");
  require_psd(b, "b");
  const double tr_ab = trace_product(a.matrix(), b.matrix());
  const double upper = a.trace() * b.trace();
  BoundReport r = make_chain_report("0 <= tr(AB) <= tr(A)tr(B)", 0.0, tr_ab, upper, tol::kChain);
  r.equality = std::abs(tr_ab) <= tol::kEquality || tight(tr_ab, upper, tol::kEquality);
  return r;
}

BoundReport lemma3_check(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "lemma3 operands differ in dimension", "b");
  const SpectralDecomposition sa = require_psd(a, "a");
  const SpectralDecomposition sb = require_psd(b, "b");
  const double n = static_cast<double>(a.dim());

  const double log_dets = log_det_psd(sa) + log_det_psd(sb);
  const double lhs = std::isinf(log_dets) ? 0.0 : n * std::exp(log_dets / n);
  const double tr_ab = trace_product(a.matrix(), b.matrix());
  BoundReport r = make_bound_report("n (det A det B)^(1/n) <= tr(AB)", lhs, tr_ab, tol::kChain);

  const HermitianMatrix b_half = matrix_power(sb, 0.5);
  const ComplexMatrix sandwich = b_half.matrix() * a.matrix() * b_half.matrix();
  const double c = sandwich.trace().real() / n;
  const double scale = sandwich.max_abs();
  const double dev = max_abs_diff(sandwich, ComplexMatrix::identity(a.dim()) * Complex(c));
  r.equality = scale == 0.0 || dev <= tol::kEquality * scale;
  return r;
}

BoundReport lemma4_check(const HermitianMatrix& a) {
  const SpectralDecomposition s = spectral_decompose(a);
  if (classify_psd(s).kind != Definiteness::PositiveDefinite)
    throw Error(ErrorCode::NotPd, "lemma4 needs a positive definite matrix", "a");
  double lower = 0.0;
  double upper = 0.0;
  double mid = 0.0;
  for (double x : s.eigenvalues) {
    lower += 1.0 - 1.0 / x;
    upper += x - 1.0;
    mid += std::log(x);
  }
  BoundReport r = make_chain_report("tr(I - A^-1) <= ln det A <= tr(A - I)", lower, mid, upper, tol::kChain);
  r.equality = max_abs_diff(a.matrix(), ComplexMatrix::identity(a.dim())) <= tol::kEquality;
  return r;
}

}  // namespace renyi
