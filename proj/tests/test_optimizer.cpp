#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "oracles.hpp"
#include "renyi/divergence.hpp"
#include "renyi/error.hpp"
#include "renyi/generators.hpp"
#include "renyi/nelder_mead.hpp"

using namespace renyi;

namespace {

oracle::Mat4 to_mat4(const HermitianMatrix& m) {
  oracle::Mat4 o{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) o[i][j] = m(i, j);
  return o;
}

oracle::Mat2 to_mat2(const HermitianMatrix& m) {
  oracle::Mat2 o{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) o[i][j] = m(i, j);
  return o;
}

DensityMatrix bipartite(const HermitianMatrix& m, std::size_t da, std::size_t db) {
  return DensityMatrix(m, BipartiteDims{da, db});
}

const DensityMatrix kMaximallyMixed4 = DensityMatrix::maximally_mixed(4).with_dims({2, 2});

}  // namespace

TEST(NelderMead, Quadratic) {
  auto f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 3.0 * (x[1] + 2.0) * (x[1] + 2.0) + 0.5 * x[0] * x[1];
  };
  const auto r = nelder_mead(f, {0.0, 0.0});
  // gradient zero: 2(x-1) + 0.5y = 0, 6(y+2) + 0.5x = 0
  const double y = (-12.0 - 0.5) / (6.0 - 0.125);
  const double x = 1.0 - 0.25 * y;
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], x, 1e-4);
  EXPECT_NEAR(r.x[1], y, 1e-4);
}

TEST(NelderMead, Rosenbrock) {
  auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const auto r = nelder_mead(f, {-1.2, 1.0}, {.initial_step = 0.5, .spread_tolerance = 1e-14, .max_iterations = 5000});
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
  EXPECT_NEAR(r.x[1], 1.0, 2e-3);
}

TEST(NelderMead, NanTreatedAsWorst) {
  auto f = [](std::span<const double> x) { return x[0] < -0.25 ? std::nan("") : (x[0] - 0.5) * (x[0] - 0.5); };
  const auto r = nelder_mead(f, {0.0});
  EXPECT_NEAR(r.x[0], 0.5, 1e-4);
}

TEST(SigmaParameters, ZeroIsMaximallyMixed) {
  const std::vector<double> zeros(9, 0.0);
  const auto s = sigma_from_parameters(zeros, 3);
  EXPECT_LT(max_abs_diff(s.matrix(), HermitianMatrix::identity(3).scaled(1.0 / 3.0).matrix()), 1e-14);
}

TEST(SigmaParameters, AlwaysDensity) {
  Rng rng(substream(Seed{31}, 0));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(4);
    for (double& x : p) x = 3.0 * rng.normal();
    EXPECT_NO_THROW(DensityMatrix{sigma_from_parameters(p, 2)});
  }
}

TEST(Optimizer, MaximallyMixedMutualInformation) {
  const auto start = std::chrono::steady_clock::now();
  const auto mi = mutual_information(kMaximallyMixed4, 2.0);
  EXPECT_NEAR(mi.value, 0.0, 1e-4);
  EXPECT_LT(max_abs_diff(mi.outcome.optimizer_sigma.matrix().matrix(),
                         HermitianMatrix::identity(2).scaled(0.5).matrix()),
            1e-3);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(Optimizer, MaximallyMixedConditionalEntropy) {
  const auto h = conditional_entropy(kMaximallyMixed4, 2.0);
  EXPECT_NEAR(h.value, std::log(2.0), 1e-4);
  EXPECT_LT(max_abs_diff(h.outcome.optimizer_sigma.matrix().matrix(),
                         HermitianMatrix::identity(2).scaled(0.5).matrix()),
            1e-3);
}

TEST(Optimizer, ProductStateHasZeroMutualInformation) {
  Rng rng(substream(Seed{41}, 0));
  for (int trial = 0; trial < 4; ++trial) {
    const auto ra = random_density(2, rng).matrix();
    const auto rb = random_density(trial < 2 ? 2 : 3, rng).matrix();
    const auto rho = bipartite(kron(ra, rb), ra.dim(), rb.dim());
    const auto mi = mutual_information(rho, 2.0);
    EXPECT_NEAR(mi.value, 0.0, 1e-4);
    EXPECT_LT(max_abs_diff(mi.outcome.optimizer_sigma.matrix().matrix(), rb.matrix()), 1e-3);
  }
}

TEST(Optimizer, ProductWithPureB) {
  // diag(0.5,0.5) (x) diag(1,0): D_2(rho || I/2 (x) sigma) = -ln q for sigma_00 = q,
  // so the infimum sits at the boundary and H(A|B) approaches ln 2 from below.
  const auto rho = bipartite(HermitianMatrix::diagonal({0.5, 0.0, 0.5, 0.0}), 2, 2);
  const auto h = conditional_entropy(rho, 2.0);
  EXPECT_LE(h.value, std::log(2.0) + 1e-9);
  EXPECT_GT(h.value, std::log(2.0) - 1e-3);
  EXPECT_GT(h.outcome.optimizer_sigma.matrix()(0, 0).real(), 0.999);
  const auto o = oracle::diagonal_grid_alpha2(to_mat4(rho.matrix()), oracle::Mat2{{{2.0, 0.0}, {0.0, 2.0}}}, 1e-3);
  EXPECT_LE(h.outcome.optimum_value, o.value + 1e-9);
}

TEST(Optimizer, DiagonalStateAgainstGrid) {
  const auto rho = bipartite(HermitianMatrix::diagonal({0.4, 0.1, 0.1, 0.4}), 2, 2);
  const auto p = to_mat4(rho.matrix());

  // conditional: reference I/2, X = (I/2)^(-1)
  const auto hc = conditional_entropy(rho, 2.0);
  const auto gc = oracle::diagonal_grid_alpha2(p, oracle::Mat2{{{2.0, 0.0}, {0.0, 2.0}}}, 1e-3);
  EXPECT_NEAR(hc.value, std::log(2.0) - gc.value, 1e-4);
  EXPECT_NEAR(hc.value, std::log(2.0) - std::log(1.36), 1e-4);

  // mutual: reference rho_A = I/2 here as well
  const auto mi = mutual_information(rho, 2.0);
  const auto rho_a = to_mat2(partial_trace_b(rho.matrix(), 2, 2));
  const auto gm = oracle::diagonal_grid_alpha2(p, oracle::inverse(rho_a), 1e-3);
  EXPECT_NEAR(mi.value, gm.value, 1e-4);
  const auto gb = oracle::bloch_grid_alpha2(p, oracle::inverse(rho_a), 0.01);
  EXPECT_NEAR(mi.value, gb.value, 1e-3);
}

TEST(Optimizer, RandomStatesAgainstBlochGrid) {
  Rng rng(substream(Seed{51}, 0));
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = random_density(4, rng).with_dims({2, 2});
    const auto p = to_mat4(rho.matrix());
    const auto x = oracle::inverse(to_mat2(partial_trace_b(rho.matrix(), 2, 2)));
    const auto mi = mutual_information(rho, 2.0);
    const auto grid = oracle::bloch_grid_alpha2(p, x, 0.01);
    EXPECT_NEAR(mi.outcome.optimum_value, grid.value, 1e-3) << "trial " << trial;
    EXPECT_LE(mi.outcome.optimum_value, grid.value + 1e-9);
  }
}

TEST(Optimizer, ProbeSeesEveryEvaluationAndBestIsReported) {
  std::vector<double> seen;
  OptimizerOptions opts;
  opts.probe = [&](double v, const HermitianMatrix& sigma) {
    seen.push_back(v);
    EXPECT_NEAR(sigma.trace(), 1.0, 1e-10);
  };
  const auto rho = random_density(4, Seed{61}).with_dims({2, 2});
  const auto mi = mutual_information(rho, 3.0, opts);
  ASSERT_FALSE(seen.empty());
  double best = INFINITY;
  for (double v : seen) best = std::min(best, v);
  EXPECT_DOUBLE_EQ(best, mi.outcome.optimum_value);
  EXPECT_GE(mi.value, -1e-9);
}

TEST(Optimizer, Deterministic) {
  const auto rho = random_density(6, Seed{62}).with_dims({2, 3});
  const auto a = conditional_entropy(rho, 1.5);
  const auto b = conditional_entropy(rho, 1.5);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.outcome.iterations, b.outcome.iterations);
}

TEST(Optimizer, MutualInformationIsNonnegative) {
  Rng rng(substream(Seed{63}, 0));
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t da = 2 + trial % 2, db = 2 + (trial / 2) % 2;
    const auto rho = random_density(da * db, rng).with_dims({da, db});
    EXPECT_GE(mutual_information(rho, 2.0).value, -1e-8);
  }
}

TEST(Optimizer, Errors) {
  EXPECT_THROW(mutual_information(DensityMatrix::maximally_mixed(4), 2.0), Error);  // no dims
  try {
    conditional_entropy(kMaximallyMixed4, 0.5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AlphaOutOfRange);
  }
  const auto singular_a = bipartite(HermitianMatrix::diagonal({0.5, 0.5, 0.0, 0.0}), 2, 2);
  try {
    mutual_information(singular_a, 2.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MarginalSingular);
  }
}
