#include "renyi/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "renyi/error.hpp"
#include "renyi/tolerances.hpp"

namespace renyi {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                    std::to_string(data_.size()),
                "matrix");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix sum dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix difference dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
  const std::size_t n = a.dim_;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "max_abs_diff dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

// --- HermitianMatrix -------------------------------------------------------

HermitianMatrix::HermitianMatrix(ComplexMatrix m) {
  const std::size_t n = m.dim();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimension must be positive", "dim");
  for (const auto& z : m.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::NonFinite, "matrix has a non-finite entry", "matrix");
  }
  const double scale = 1.0 + m.max_abs();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(m(i, i).imag()) > tol::kHermitian)
      throw Error(ErrorCode::NonHermitianInput,
                  "diagonal entry " + std::to_string(i) + " has a nonzero imaginary part", "matrix");
    for (std::size_t j = i + 1; j < n; ++j)
      asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
  }
  if (asym > tol::kHermitian * scale)
    throw Error(ErrorCode::NonHermitianInput, "matrix is not Hermitian", "matrix");
  m_ = hermitian_part(m).m_;
}

HermitianMatrix hermitian_part(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return HermitianMatrix(std::move(h), HermitianMatrix::Unchecked{});
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  return HermitianMatrix(ComplexMatrix::identity(dim));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  return HermitianMatrix(ComplexMatrix::diagonal(values));
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

HermitianMatrix HermitianMatrix::scaled(double factor) const {
  return HermitianMatrix(m_ * Complex(factor), Unchecked{});
}

// --- Spectral decomposition -------------------------------------------------

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

// One complex Jacobi rotation J zeroing a(p, q): first a diagonal phase that
// makes a(p, q) real, then the classical real rotation. A <- J^dagger A J,
// V <- V J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = std::conj(apq) / g;  // e^{-i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase;
  const Complex jqq = c * phase;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * g;
  a(q, q) = aqq + t * g;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

SpectralDecomposition spectral_decompose(const HermitianMatrix& input) {
  const std::size_t n = input.dim();
  ComplexMatrix a = input.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = tol::kJacobiOffDiagonal * frobenius(a);
  int sweep = 0;
  while (off_diagonal_mass(a) > threshold) {
    if (++sweep > tol::kJacobiMaxSweeps)
      throw Error(ErrorCode::ConvergenceFailure, "Jacobi eigensolver exceeded the sweep limit");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

HermitianMatrix SpectralDecomposition::apply(const std::function<double(double)>& f) const {
  const std::size_t n = eigenvalues.size();
  std::vector<double> fl(n);
  for (std::size_t k = 0; k < n; ++k) fl[k] = f(eigenvalues[k]);
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eigenvectors(i, k) * fl[k] * std::conj(eigenvectors(j, k));
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
  }
  return hermitian_part(out);
}

HermitianMatrix SpectralDecomposition::reconstruct() const {
  return apply([](double x) { return x; });
}

PsdClass classify_psd(const SpectralDecomposition& spectrum) {
  const double lo = spectrum.eigenvalues.empty() ? 0.0 : spectrum.eigenvalues.front();
  if (lo > tol::kPsd) return {Definiteness::PositiveDefinite, lo};
  if (lo >= -tol::kPsd) return {Definiteness::PositiveSemiDefinite, lo};
  return {Definiteness::Indefinite, lo};
}

PsdClass classify_psd(const HermitianMatrix& a) { return classify_psd(spectral_decompose(a)); }

std::vector<double> clipped_eigenvalues(const SpectralDecomposition& spectrum) {
  std::vector<double> out = spectrum.eigenvalues;
  for (auto& x : out)
    if (x < 0.0 && x >= -tol::kPsd) x = 0.0;
  return out;
}

double spectral_pow(double x, double r) {
  if (x == 0.0) return r == 0.0 ? 1.0 : (r > 0.0 ? 0.0 : INFINITY);
  return std::pow(x, r);
}

HermitianMatrix matrix_power(const SpectralDecomposition& spectrum, double r) {
  const PsdClass cls = classify_psd(spectrum);
  if (cls.kind == Definiteness::Indefinite)
    throw Error(ErrorCode::NotPsd,
                "matrix power needs a PSD matrix; min eigenvalue " + std::to_string(cls.min_eigenvalue));
  if (r < 0.0 && cls.kind != Definiteness::PositiveDefinite)
    throw Error(ErrorCode::SingularPower, "negative power of a singular matrix");
  SpectralDecomposition clipped{clipped_eigenvalues(spectrum), spectrum.eigenvectors};
  return clipped.apply([r](double x) { return spectral_pow(x, r); });
}

HermitianMatrix matrix_power(const HermitianMatrix& a, double r) {
  return matrix_power(spectral_decompose(a), r);
}

double log_det(const SpectralDecomposition& spectrum) {
  const PsdClass cls = classify_psd(spectrum);
  if (cls.kind != Definiteness::PositiveDefinite)
    throw Error(ErrorCode::NotPd, "log_det needs a positive definite matrix");
  double s = 0.0;
  for (double x : spectrum.eigenvalues) s += std::log(x);
  return s;
}

double log_det(const HermitianMatrix& a) { return log_det(spectral_decompose(a)); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  return hermitian_part(kron(a.matrix(), b.matrix()));
}

namespace {
void check_bipartite(const HermitianMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0 || m.dim() != dim_a * dim_b)
    throw Error(ErrorCode::DimensionMismatch,
                "matrix of dim " + std::to_string(m.dim()) + " is not " + std::to_string(dim_a) + "x" +
                    std::to_string(dim_b),
                "dims");
}
}  // namespace

HermitianMatrix partial_trace_b(const HermitianMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  check_bipartite(m, dim_a, dim_b);
  ComplexMatrix out(dim_a);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t ap = 0; ap < dim_a; ++ap) {
      Complex s = 0.0;
      for (std::size_t b = 0; b < dim_b; ++b) s += m(a * dim_b + b, ap * dim_b + b);
      out(a, ap) = s;
    }
  return hermitian_part(out);
}

HermitianMatrix partial_trace_a(const HermitianMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  check_bipartite(m, dim_a, dim_b);
  ComplexMatrix out(dim_b);
  for (std::size_t b = 0; b < dim_b; ++b)
    for (std::size_t bp = 0; bp < dim_b; ++bp) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < dim_a; ++a) s += m(a * dim_b + b, a * dim_b + bp);
      out(b, bp) = s;
    }
  return hermitian_part(out);
}

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "trace_product dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += (a(i, j) * b(j, i)).real();
  return s;
}

}  // namespace renyi
