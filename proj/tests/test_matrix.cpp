#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "renyi/error.hpp"
#include "renyi/generators.hpp"
#include "renyi/matrix.hpp"

using namespace renyi;

namespace {

double unitarity_error(const ComplexMatrix& v) {
  return max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(v.dim()));
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no renyi::Error thrown";
  return ErrorCode::IoError;
}

}  // namespace

TEST(Hermitian, RejectsAsymmetric) {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  EXPECT_EQ(code_of([&] { HermitianMatrix h(m); }), ErrorCode::NonHermitianInput);
  ComplexMatrix d(1);
  d(0, 0) = Complex(1.0, 0.5);
  EXPECT_EQ(code_of([&] { HermitianMatrix h(d); }), ErrorCode::NonHermitianInput);
}

TEST(Hermitian, RejectsNonFinite) {
  ComplexMatrix m(1);
  m(0, 0) = std::nan("");
  EXPECT_THROW(HermitianMatrix{m}, Error);
}

TEST(Spectral, Identity) {
  const auto s = spectral_decompose(HermitianMatrix::identity(3));
  for (double l : s.eigenvalues) EXPECT_NEAR(l, 1.0, 1e-14);
  EXPECT_LT(unitarity_error(s.eigenvectors), 1e-12);
}

TEST(Spectral, DiagonalSorted) {
  const auto s = spectral_decompose(HermitianMatrix::diagonal({3.0, 1.0, 2.0}));
  EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[1], 2.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[2], 3.0, 1e-14);
  for (std::size_t i = 0; i < 3; ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < 3; ++j)
      if (std::abs(std::abs(s.eigenvectors(i, j)) - 1.0) < 1e-12) ++ones;
    EXPECT_EQ(ones, 1);
  }
}

TEST(Spectral, RealSymmetric2x2) {
  ComplexMatrix m(2, {2.0, 1.0, 1.0, 2.0});
  const auto s = spectral_decompose(HermitianMatrix(m));
  EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-13);
  EXPECT_NEAR(s.eigenvalues[1], 3.0, 1e-13);
}

TEST(Spectral, ComplexAgainstClosedForm2x2) {
  // [[a, z], [conj z, b]]: (a+b)/2 -+ sqrt(((a-b)/2)^2 + |z|^2)
  Rng rng(substream(Seed{11}, 0));
  for (int trial = 0; trial < 500; ++trial) {
    const double a = rng.normal(), b = rng.normal();
    const Complex z(rng.normal(), rng.normal());
    const auto s = spectral_decompose(HermitianMatrix(ComplexMatrix(2, {a, z, std::conj(z), b})));
    const double mid = 0.5 * (a + b);
    const double rad = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(z));
    EXPECT_NEAR(s.eigenvalues[0], mid - rad, 1e-12);
    EXPECT_NEAR(s.eigenvalues[1], mid + rad, 1e-12);
  }
}

TEST(Spectral, RandomReconstructionAndUnitarity) {
  Rng rng(substream(Seed{2024}, 0));
  double worst_recon = 0.0, worst_unit = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t dim = 1 + trial % 8;
    const HermitianMatrix a = random_hermitian(dim, rng);
    const auto s = spectral_decompose(a);
    worst_recon = std::max(worst_recon, max_abs_diff(s.reconstruct().matrix(), a.matrix()));
    worst_unit = std::max(worst_unit, unitarity_error(s.eigenvectors));
    for (std::size_t i = 1; i < dim; ++i) ASSERT_LE(s.eigenvalues[i - 1], s.eigenvalues[i]);
  }
  EXPECT_LT(worst_recon, 1e-9);
  EXPECT_LT(worst_unit, 1e-9);
}

TEST(Spectral, TraceEqualsEigenvalueSum) {
  Rng rng(substream(Seed{5}, 0));
  for (int trial = 0; trial < 200; ++trial) {
    const HermitianMatrix a = random_hermitian(1 + trial % 8, rng);
    double s = 0.0;
    for (double l : spectral_decompose(a).eigenvalues) s += l;
    EXPECT_NEAR(s, a.trace(), 1e-10);
  }
}

TEST(Power, Examples) {
  EXPECT_LT(max_abs_diff(matrix_power(HermitianMatrix::identity(2), 0.5).matrix(),
                         ComplexMatrix::identity(2)),
            1e-14);
  const auto d = HermitianMatrix::diagonal({4.0, 9.0});
  EXPECT_LT(max_abs_diff(matrix_power(d, 0.5).matrix(), HermitianMatrix::diagonal({2.0, 3.0}).matrix()),
            1e-13);
  EXPECT_LT(max_abs_diff(matrix_power(d, -1.0).matrix(),
                         HermitianMatrix::diagonal({0.25, 1.0 / 9.0}).matrix()),
            1e-14);
}

TEST(Power, Conventions) {
  EXPECT_EQ(spectral_pow(0.0, 0.0), 1.0);
  EXPECT_EQ(spectral_pow(0.0, 2.0), 0.0);
  // r = 0 on a singular matrix is the identity
  EXPECT_LT(max_abs_diff(matrix_power(HermitianMatrix::diagonal({1.0, 0.0}), 0.0).matrix(),
                         ComplexMatrix::identity(2)),
            1e-14);
}

TEST(Power, Errors) {
  EXPECT_EQ(code_of([] { matrix_power(HermitianMatrix::diagonal({1.0, -0.5}), 0.5); }), ErrorCode::NotPsd);
  EXPECT_EQ(code_of([] { matrix_power(HermitianMatrix::diagonal({1.0, 0.0}), -1.0); }),
            ErrorCode::SingularPower);
  // tiny negative eigenvalues are clipped rather than rejected
  EXPECT_NO_THROW(matrix_power(HermitianMatrix::diagonal({1.0, -1e-12}), 0.5));
}

TEST(Power, RoundTripOnRandomPsd) {
  Rng rng(substream(Seed{77}, 0));
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t dim = 1 + trial % 8;
    const HermitianMatrix a = random_pd(dim, rng, 100.0);
    const double r = trial % 2 == 0 ? 0.5 : 2.0;
    const auto back = matrix_power(matrix_power(a, r), 1.0 / r);
    worst = std::max(worst, max_abs_diff(back.matrix(), a.matrix()) / (1.0 + a.max_abs()));
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(Power, SquareMatchesProduct) {
  Rng rng(substream(Seed{78}, 0));
  for (int trial = 0; trial < 200; ++trial) {
    const HermitianMatrix a = random_pd(1 + trial % 8, rng, 50.0);
    EXPECT_LT(max_abs_diff(matrix_power(a, 2.0).matrix(), a.matrix() * a.matrix()), 1e-10);
  }
}

TEST(Psd, ProductOfSquareRootIsPsd) {
  // A^(1/2) B A^(1/2) of PSD inputs stays PSD
  Rng rng(substream(Seed{9}, 0));
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = 1 + trial % 6;
    const auto a = random_density(dim, rng, 1 + trial % dim).matrix();
    const auto b = random_density(dim, rng).matrix();
    const auto h = matrix_power(a, 0.5).matrix();
    EXPECT_NE(classify_psd(hermitian_part(h * b.matrix() * h)).kind, Definiteness::Indefinite);
  }
}

TEST(Psd, Classification) {
  EXPECT_EQ(classify_psd(HermitianMatrix::identity(2)).kind, Definiteness::PositiveDefinite);
  EXPECT_EQ(classify_psd(HermitianMatrix::diagonal({1.0, 0.0})).kind, Definiteness::PositiveSemiDefinite);
  EXPECT_EQ(classify_psd(HermitianMatrix::diagonal({1.0, -1.0})).kind, Definiteness::Indefinite);
}

TEST(LogDet, Examples) {
  EXPECT_NEAR(log_det(HermitianMatrix::identity(4)), 0.0, 1e-14);
  EXPECT_NEAR(log_det(HermitianMatrix::diagonal({std::numbers::e, std::numbers::e})), 2.0, 1e-14);
  EXPECT_NEAR(log_det(HermitianMatrix::diagonal({2.0, 0.5})), 0.0, 1e-14);
  EXPECT_EQ(code_of([] { log_det(HermitianMatrix::diagonal({1.0, 0.0})); }), ErrorCode::NotPd);
}

TEST(Kron, Examples) {
  EXPECT_LT(max_abs_diff(kron(HermitianMatrix::identity(2), HermitianMatrix::identity(2)).matrix(),
                         ComplexMatrix::identity(4)),
            0.0 + 1e-15);
  EXPECT_LT(max_abs_diff(kron(HermitianMatrix::diagonal({1.0, 2.0}), HermitianMatrix::diagonal({3.0, 4.0})).matrix(),
                         HermitianMatrix::diagonal({3.0, 4.0, 6.0, 8.0}).matrix()),
            1e-15);
  const auto half = HermitianMatrix::identity(2).scaled(0.5);
  EXPECT_LT(max_abs_diff(kron(half, half).matrix(), HermitianMatrix::identity(4).scaled(0.25).matrix()), 1e-15);
}

TEST(Kron, TraceMultiplies) {
  Rng rng(substream(Seed{3}, 0));
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_hermitian(1 + trial % 3, rng);
    const auto b = random_hermitian(1 + trial % 4, rng);
    EXPECT_NEAR(kron(a, b).trace(), a.trace() * b.trace(), 1e-10 * (1.0 + std::abs(a.trace() * b.trace())));
  }
}

TEST(PartialTrace, Examples) {
  const auto mm = HermitianMatrix::identity(4).scaled(0.25);
  EXPECT_LT(max_abs_diff(partial_trace_b(mm, 2, 2).matrix(), HermitianMatrix::identity(2).scaled(0.5).matrix()),
            1e-15);
  const auto d = HermitianMatrix::diagonal({0.1, 0.2, 0.3, 0.4});
  EXPECT_LT(max_abs_diff(partial_trace_b(d, 2, 2).matrix(), HermitianMatrix::diagonal({0.3, 0.7}).matrix()),
            1e-15);
  EXPECT_LT(max_abs_diff(partial_trace_a(d, 2, 2).matrix(), HermitianMatrix::diagonal({0.4, 0.6}).matrix()),
            1e-15);
}

TEST(PartialTrace, ProductMarginals) {
  Rng rng(substream(Seed{4}, 0));
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t da = 1 + trial % 3, db = 1 + (trial / 3) % 4;
    const auto a = random_hermitian(da, rng);
    const auto b = random_density(db, rng).matrix();
    const auto c = random_density(da, rng).matrix();
    const auto pb = random_hermitian(db, rng);
    EXPECT_LT(max_abs_diff(partial_trace_b(kron(a, b), da, db).matrix(), a.matrix()), 1e-12);
    EXPECT_LT(max_abs_diff(partial_trace_a(kron(c, pb), da, db).matrix(), pb.matrix()), 1e-12);
  }
}

TEST(PartialTrace, AgainstLoopOracle) {
  Rng rng(substream(Seed{6}, 0));
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_hermitian(4, rng);
    oracle::Mat4 o{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) o[i][j] = m(i, j);
    const auto expect = oracle::partial_trace_b(o);
    const auto got = partial_trace_b(m, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) EXPECT_LT(std::abs(got(i, j) - expect[i][j]), 1e-14);
  }
}

TEST(PartialTrace, DimensionMismatch) {
  EXPECT_EQ(code_of([] { partial_trace_b(HermitianMatrix::identity(4), 3, 2); }), ErrorCode::DimensionMismatch);
}
