#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace renyi {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. No structural guarantees; used as
// the working representation for products and intermediate results.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// A ComplexMatrix certified Hermitian at construction. The stored entries are
// the exact Hermitian part (A + A^dagger) / 2 of the validated input.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  // Throws NonHermitianInput or NonFinite.
  explicit HermitianMatrix(ComplexMatrix m);

  static HermitianMatrix identity(std::size_t dim);
  static HermitianMatrix diagonal(std::span<const double> values);
  static HermitianMatrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return m_.dim(); }
  const Complex& operator()(std::size_t row, std::size_t col) const { return m_(row, col); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }
  double max_abs() const { return m_.max_abs(); }

  HermitianMatrix scaled(double factor) const;

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
  friend HermitianMatrix hermitian_part(const ComplexMatrix& m);

  ComplexMatrix m_;
};

// (M + M^dagger) / 2 without validation; for products known to be Hermitian
// up to rounding, such as V diag V^dagger.
HermitianMatrix hermitian_part(const ComplexMatrix& m);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, eigenvectors in columns

  // V diag(f(lambda)) V^dagger.
  HermitianMatrix apply(const std::function<double(double)>& f) const;
  HermitianMatrix reconstruct() const;
};

// Cyclic complex Jacobi. Throws ConvergenceFailure after kJacobiMaxSweeps.
SpectralDecomposition spectral_decompose(const HermitianMatrix& a);

enum class Definiteness { PositiveDefinite, PositiveSemiDefinite, Indefinite };

struct PsdClass {
  Definiteness kind;
  double min_eigenvalue;
};

PsdClass classify_psd(const SpectralDecomposition& spectrum);
PsdClass classify_psd(const HermitianMatrix& a);

// Eigenvalues in [-psd_tol, 0) are mapped to exact zeros.
std::vector<double> clipped_eigenvalues(const SpectralDecomposition& spectrum);

// Real power with 0^r = 0 for r > 0 and 0^0 = 1.
double spectral_pow(double x, double r);

// A^r via the spectrum. A must be PSD; r < 0 additionally requires PD.
HermitianMatrix matrix_power(const HermitianMatrix& a, double r);
HermitianMatrix matrix_power(const SpectralDecomposition& spectrum, double r);

// ln det A = sum ln lambda_i (natural log). Throws NotPd.
double log_det(const HermitianMatrix& a);
double log_det(const SpectralDecomposition& spectrum);

// A-major composite index: (A (x) B)[a*dB + b][a'*dB + b'] = A[a][a'] B[b][b'].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);

HermitianMatrix partial_trace_b(const HermitianMatrix& m, std::size_t dim_a, std::size_t dim_b);
HermitianMatrix partial_trace_a(const HermitianMatrix& m, std::size_t dim_a, std::size_t dim_b);

// Re sum_ij A_ij B_ji.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace renyi
