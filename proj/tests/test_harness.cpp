#include <gtest/gtest.h>

#include <cmath>

#include "renyi/error.hpp"
#include "renyi/generators.hpp"
#include "renyi/harness.hpp"

using namespace renyi;

TEST(Rng, SubstreamsAreIndependentOfOrder) {
  EXPECT_EQ(substream(Seed{1}, 5), substream(Seed{1}, 5));
  EXPECT_NE(substream(Seed{1}, 5), substream(Seed{1}, 6));
  EXPECT_NE(substream(Seed{1}, 5), substream(Seed{2}, 5));
}

TEST(Rng, UniformAndNormalMoments) {
  Rng rng(substream(Seed{8}, 0));
  double su = 0.0, sn = 0.0, sn2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
  }
  EXPECT_NEAR(su / n, 0.5, 5e-3);
  EXPECT_NEAR(sn / n, 0.0, 1e-2);
  EXPECT_NEAR(sn2 / n, 1.0, 1e-2);
}

TEST(Generators, DensityContract) {
  Rng rng(substream(Seed{100}, 0));
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t dim = 1 + trial % 8;
    // the DensityMatrix constructor enforces Hermitian, PSD and unit trace
    const DensityMatrix rho = random_density(dim, rng);
    ASSERT_NEAR(rho.matrix().trace(), 1.0, 1e-10);
    ASSERT_EQ(rho.support_eigenvalues().size(), dim);
  }
}

TEST(Generators, DensityRank) {
  const auto rho = random_density(4, Seed{3}, 2);
  std::size_t above = 0;
  for (double l : rho.spectrum().eigenvalues)
    if (l > 1e-12) ++above;
  EXPECT_EQ(above, 2u);
  EXPECT_THROW(random_density(3, Seed{3}, 0), Error);
  EXPECT_THROW(random_density(3, Seed{3}, 4), Error);
}

TEST(Generators, DensityDeterministic) {
  const auto a = random_density(3, Seed{17});
  const auto b = random_density(3, Seed{17});
  const auto ea = a.matrix().matrix().entries();
  const auto eb = b.matrix().matrix().entries();
  ASSERT_EQ(ea.size(), eb.size());
  for (std::size_t i = 0; i < ea.size(); ++i) EXPECT_EQ(ea[i], eb[i]);
}

TEST(Generators, PdContract) {
  const auto a = random_pd(2, Seed{1}, 100.0);
  EXPECT_GT(spectral_decompose(a).eigenvalues.front(), 0.0);
  const auto s = random_pd(1, Seed{2}, 10.0);
  EXPECT_GT(s(0, 0).real(), 0.0);
  const auto c = random_pd(4, Seed{3}, 1.0);
  EXPECT_LT(max_abs_diff(c.matrix(), HermitianMatrix::identity(4).matrix()), 1e-12);
  Rng rng(substream(Seed{4}, 0));
  for (int trial = 0; trial < 200; ++trial) {
    const auto ev = spectral_decompose(random_pd(1 + trial % 8, rng, 50.0)).eigenvalues;
    EXPECT_LE(ev.back() / ev.front(), 50.0 * (1.0 + 1e-9));
  }
}

TEST(Generators, SimplexContract) {
  const auto p = random_simplex(5, Seed{7}, 2);
  int zeros = 0;
  double sum = 0.0;
  for (double x : p.values()) {
    zeros += x == 0.0;
    sum += x;
  }
  EXPECT_EQ(zeros, 2);
  EXPECT_NEAR(sum, 1.0, 1e-14);
  EXPECT_EQ(random_simplex(1, Seed{7}, 0)[0], 1.0);
  const auto q = random_simplex(5, Seed{7}, 2);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(p[i], q[i]);
  EXPECT_THROW(random_simplex(3, Seed{7}, 3), Error);
}

TEST(Generators, SimplexMeanOnSupport) {
  Rng rng(substream(Seed{9}, 0));
  const std::size_t n = 6, zeros = 2;
  double total = 0.0;
  std::size_t count = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto p = random_simplex(n, rng, zeros);
    for (double x : p.values())
      if (x > 0.0) {
        total += x;
        ++count;
      }
  }
  const double expected = 1.0 / static_cast<double>(n - zeros);
  EXPECT_EQ(count, 10000u * (n - zeros));
  EXPECT_NEAR(total / static_cast<double>(count), expected, 0.05 * expected);
}

TEST(Generators, SimplexZeroPositionsAreShuffled) {
  Rng rng(substream(Seed{10}, 0));
  std::vector<int> zero_hits(4, 0);
  for (int trial = 0; trial < 4000; ++trial) {
    const auto p = random_simplex(4, rng, 1);
    for (std::size_t i = 0; i < 4; ++i) zero_hits[i] += p[i] == 0.0;
  }
  for (int h : zero_hits) EXPECT_NEAR(h, 1000, 150);
}

TEST(Suites, Registry) {
  EXPECT_EQ(suite_names().size(), 13u);
  try {
    run_suite("nope", 1, Seed{1});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSuite);
  }
}

TEST(Suites, LogDetSuiteThousand) {
  const auto r = run_suite("lemma4", 1000, Seed{1});
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.equality_injected, 10u);
  EXPECT_EQ(r.equality_flagged, 10u);
}

TEST(Suites, OrderBoundSuiteThousand) {
  const auto r = run_suite("t1", 1000, Seed{1});
  EXPECT_TRUE(r.failures.empty());
  EXPECT_LE(r.max_violation, 1e-9);
}

TEST(Suites, MutualInformationSuiteTwoHundred) {
  const auto r = run_suite("t6", 200, Seed{1});
  EXPECT_TRUE(r.failures.empty());
  EXPECT_LE(r.max_violation, 1e-4);
}

TEST(Suites, FailuresIffViolationAboveTolerance) {
  for (const auto& name : suite_names()) {
    if (name == "t6") continue;
    const auto r = run_suite(name, 120, Seed{5});
    EXPECT_EQ(!r.failures.empty(), r.max_violation > r.tolerance) << name;
  }
}

TEST(Suites, Deterministic) {
  for (const std::string name : {"lemma3", "t3_2", "diag_oracle"}) {
    const auto a = run_suite(name, 150, Seed{12});
    const auto b = run_suite(name, 150, Seed{12});
    EXPECT_EQ(a.max_violation, b.max_violation) << name;
    EXPECT_EQ(a.failures.size(), b.failures.size()) << name;
    EXPECT_EQ(a.equality_flagged, b.equality_flagged) << name;
    EXPECT_EQ(trial_input(name, Seed{12}, 77), trial_input(name, Seed{12}, 77));
  }
}

TEST(Suites, ReplayReproducesFailures) {
  // t2_2 is the suite known to record failures
  const auto r = run_suite("t2_2", 200, Seed{1});
  ASSERT_FALSE(r.failures.empty());
  for (const auto& f : r.failures) {
    const auto again = replay_trial("t2_2", f.input);
    EXPECT_EQ(again.violation, f.report.violation);
    EXPECT_EQ(again.lhs, f.report.lhs);
    EXPECT_EQ(f.input, trial_input("t2_2", Seed{1}, f.trial));
  }
}

TEST(Suites, ReplayMatchesTrialInput) {
  for (const auto& name : suite_names()) {
    if (name == "t6") continue;
    for (std::uint64_t i : {0u, 50u, 99u}) {
      const auto rep = replay_trial(name, trial_input(name, Seed{3}, i));
      EXPECT_TRUE(std::isfinite(rep.violation)) << name << " " << i;
    }
  }
}
