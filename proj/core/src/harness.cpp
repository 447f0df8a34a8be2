#include "renyi/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "renyi/classical_entropy.hpp"
#include "renyi/divergence.hpp"
#include "renyi/error.hpp"
#include "renyi/generators.hpp"
#include "renyi/io.hpp"
#include "renyi/matrix_inequalities.hpp"
#include "renyi/quantum_entropy.hpp"
#include "renyi/tolerances.hpp"

namespace renyi {

namespace {

using io::Json;

constexpr std::size_t kNoDimCap = std::numeric_limits<std::size_t>::max();
const std::vector<double> kOrders = {0.3, 0.5, 0.9, 1.5, 2.0, 3.0, 5.0};

struct Suite {
  double tolerance;
  std::function<Json(std::uint64_t index, Rng& rng, bool inject)> generate;
  std::function<BoundReport(const Json& input)> evaluate;
};

std::size_t cycled_dim(std::uint64_t index) { return 1 + index % 8; }

// Orders are cycled on index / 8 so every (dim, order) pair occurs.
double cycled_order(std::uint64_t index, const std::function<bool(double)>& valid) {
  std::vector<double> orders;
  std::copy_if(kOrders.begin(), kOrders.end(), std::back_inserter(orders), valid);
  return orders[(index / 8) % orders.size()];
}

bool above_one(double a) { return a > 1.0; }
bool below_one(double a) { return a < 1.0; }
bool any_order(double) { return true; }

Json matrix_json(const HermitianMatrix& m) { return io::to_json(io::matrix_file(m)); }
Json density_json(const DensityMatrix& rho) { return io::to_json(io::matrix_file(rho)); }

HermitianMatrix hermitian_from(const Json& j) {
  return HermitianMatrix(io::matrix_file_from_json(j, kNoDimCap).matrix);
}

DensityMatrix density_from(const Json& j) {
  io::MatrixFile f = io::matrix_file_from_json(j, kNoDimCap);
  return DensityMatrix(HermitianMatrix(std::move(f.matrix)), f.dims);
}

ProbabilityVector distribution_from(const Json& j) {
  return ProbabilityVector(io::distribution_file_from_json(j).p);
}

Json distribution_json(const ProbabilityVector& p) {
  return io::to_json(io::DistributionFile{{p.values().begin(), p.values().end()}});
}

BoundReport identity_report(std::string relation, double lhs, double rhs, double tolerance) {
  BoundReport r;
  r.relation = std::move(relation);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = -std::abs(lhs - rhs);
  r.violation = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
  if (std::isnan(r.violation)) r.violation = INFINITY;
  r.pass = r.violation <= tolerance;
  r.equality = r.pass;
  r.tolerance = tolerance;
  return r;
}

// rank-r projector / r in a random basis
DensityMatrix uniform_on_support(std::size_t dim, std::size_t rank, Rng& rng) {
  std::vector<double> lambda(dim, 0.0);
  for (std::size_t i = 0; i < rank; ++i) lambda[i] = 1.0 / static_cast<double>(rank);
  return DensityMatrix(SpectralDecomposition{lambda, random_unitary(dim, rng)}.reconstruct());
}

ProbabilityVector uniform_simplex(std::size_t n, std::size_t zeros) {
  std::vector<double> p(n, 0.0);
  for (std::size_t i = zeros; i < n; ++i) p[i] = 1.0 / static_cast<double>(n - zeros);
  return ProbabilityVector(std::move(p));
}

DensityMatrix normalized_pd(std::size_t dim, Rng& rng, double cap) {
  HermitianMatrix m = random_pd(dim, rng, cap);
  return DensityMatrix(m.scaled(1.0 / m.trace()));
}

std::size_t random_rank(std::size_t dim, Rng& rng) { return 1 + static_cast<std::size_t>(rng.below(dim)); }

const std::map<std::string, Suite, std::less<>>& registry() {
  static const std::map<std::string, Suite, std::less<>> suites = [] {
    std::map<std::string, Suite, std::less<>> s;

    s["lemma2"] = {
        tol::kChain,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t dim = cycled_dim(index);
          if (inject) {
            // A, B multiples of the same rank-one projector: tr(AB) = tr A tr B.
            const DensityMatrix p = uniform_on_support(dim, 1, rng);
            const double sa = rng.uniform(0.5, 3.0);
            const double sb = rng.uniform(0.5, 3.0);
            return Json{{"a", matrix_json(p.matrix().scaled(sa))}, {"b", matrix_json(p.matrix().scaled(sb))}};
          }
          const DensityMatrix a = random_density(dim, rng, random_rank(dim, rng));
          const DensityMatrix b = random_density(dim, rng, random_rank(dim, rng));
          const double sa = rng.uniform(0.5, 3.0);
          const double sb = rng.uniform(0.5, 3.0);
          return Json{{"a", matrix_json(a.matrix().scaled(sa))}, {"b", matrix_json(b.matrix().scaled(sb))}};
        },
        [](const Json& in) { return lemma2_check(hermitian_from(in.at("a")), hermitian_from(in.at("b"))); }};

    s["lemma3"] = {
        tol::kChain,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t dim = cycled_dim(index);
          const HermitianMatrix b = random_pd(dim, rng, 100.0);
          if (inject) {
            // A = c B^-1 gives B^1/2 A B^1/2 = c I.
            const HermitianMatrix a = matrix_power(b, -1.0).scaled(rng.uniform(0.5, 3.0));
            return Json{{"a", matrix_json(a)}, {"b", matrix_json(b)}};
          }
          const HermitianMatrix a = random_pd(dim, rng, 100.0);
          return Json{{"a", matrix_json(a)}, {"b", matrix_json(b)}};
        },
        [](const Json& in) { return lemma3_check(hermitian_from(in.at("a")), hermitian_from(in.at("b"))); }};

    s["lemma4"] = {
        tol::kChain,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t dim = cycled_dim(index);
          if (inject) return Json{{"a", matrix_json(HermitianMatrix::identity(dim))}};
          return Json{{"a", matrix_json(random_pd(dim, rng, 100.0))}};
        },
        [](const Json& in) { return lemma4_check(hermitian_from(in.at("a"))); }};

    s["t1"] = {
        tol::kChain,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t n = cycled_dim(index);
          const std::size_t zeros = static_cast<std::size_t>(rng.below(n));
          const ProbabilityVector p = inject ? uniform_simplex(n, zeros) : random_simplex(n, rng, zeros);
          return Json{{"dist", distribution_json(p)}, {"beta", cycled_order(index, any_order)}};
        },
        [](const Json& in) {
          return t1_check(distribution_from(in.at("dist")), BetaOrder(in.at("beta").get<double>()));
        }};

    s["t2_2"] = {
        tol::kChain,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t n = cycled_dim(index);
          const std::size_t zeros = static_cast<std::size_t>(rng.below(n));
          const ProbabilityVector p = inject ? uniform_simplex(n, zeros) : random_simplex(n, rng, zeros);
          return Json{{"dist", distribution_json(p)}, {"beta", cycled_order(index, below_one)}};
        },
        [](const Json& in) {
          return t2_2_check(distribution_from(in.at("dist")), BetaOrder(in.at("beta").get<double>()));
        }};

    s["t3"] = {
        tol::kChain,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t dim = cycled_dim(index);
          const std::size_t rank = random_rank(dim, rng);
          const DensityMatrix rho = inject ? uniform_on_support(dim, rank, rng) : random_density(dim, rng, rank);
          return Json{{"rho", density_json(rho)}, {"alpha", cycled_order(index, any_order)}};
        },
        [](const Json& in) {
          return t3_bound(density_from(in.at("rho")), in.at("alpha").get<double>()).spectral;
        }};

    s["t3_2"] = {
        tol::kChain,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t dim = cycled_dim(index);
          const DensityMatrix rho =
              inject ? DensityMatrix::maximally_mixed(dim) : random_density(dim, rng, random_rank(dim, rng));
          return Json{{"rho", density_json(rho)}, {"alpha", cycled_order(index, any_order)}};
        },
        [](const Json& in) {
          const T3Report r = t3_bound(density_from(in.at("rho")), in.at("alpha").get<double>());
          return r.sandwich ? *r.sandwich : r.cap;
        }};

    s["t4"] = {
        tol::kChain,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t dim = cycled_dim(index);
          const double alpha = cycled_order(index, above_one);
          if (inject) {
            const DensityMatrix mm = DensityMatrix::maximally_mixed(dim);
            return Json{{"rho", density_json(mm)}, {"sigma", density_json(mm)}, {"alpha", alpha}};
          }
          const DensityMatrix rho = normalized_pd(dim, rng, 100.0);
          const DensityMatrix sigma = normalized_pd(dim, rng, 100.0);
          return Json{{"rho", density_json(rho)}, {"sigma", density_json(sigma)}, {"alpha", alpha}};
        },
        [](const Json& in) {
          return t4_lower_bound(density_from(in.at("rho")), hermitian_from(in.at("sigma")),
                                in.at("alpha").get<double>());
        }};

    s["t6"] = {
        tol::kOptimizer,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const BipartiteDims dims{2 + index % 2, 2 + (index / 2) % 2};
          const double alpha = std::vector<double>{1.5, 2.0, 3.0, 5.0}[(index / 4) % 4];
          const std::size_t dim = dims.a * dims.b;
          if (inject) return Json{{"rho", density_json(DensityMatrix::maximally_mixed(dim).with_dims(dims))},
                                  {"alpha", alpha}};
          DensityMatrix rho = random_density(dim, rng);
          while (!rho.positive_definite()) rho = random_density(dim, rng);
          return Json{{"rho", density_json(rho.with_dims(dims))}, {"alpha", alpha}};
        },
        [](const Json& in) {
          const DensityMatrix rho = density_from(in.at("rho"));
          const double alpha = in.at("alpha").get<double>();
          return t6_lower_bound(rho, alpha, mutual_information(rho, alpha).value);
        }};

    s["triangle"] = {
        tol::kChain,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const double alpha = cycled_order(index, above_one);
          if (inject) {
            // In one dimension both sides equal -ln s.
            const double scale = rng.uniform(0.2, 5.0);
            return Json{{"rho", density_json(DensityMatrix::maximally_mixed(1))},
                        {"sigma", matrix_json(HermitianMatrix::diagonal({scale}))},
                        {"alpha", alpha}};
          }
          const std::size_t dim = cycled_dim(index);
          const DensityMatrix rho = random_density(dim, rng, random_rank(dim, rng));
          const HermitianMatrix sigma = random_pd(dim, rng, 100.0).scaled(rng.uniform(0.2, 5.0));
          return Json{{"rho", density_json(rho)}, {"sigma", matrix_json(sigma)}, {"alpha", alpha}};
        },
        [](const Json& in) {
          return triangle_bound_check(density_from(in.at("rho")), hermitian_from(in.at("sigma")),
                                      in.at("alpha").get<double>());
        }};

    s["info_fn_eq"] = {
        1e-9,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const double beta = cycled_order(index, any_order);
          double x, y;
          if (inject) {
            x = rng.uniform();
            y = (index / 100) % 2 == 0 ? 0.0 : 1.0 - x;
            if (1.0 - y <= 1e-6) y = 0.0;
            if (1.0 - x <= 1e-6) x = 0.5;
          } else {
            do {
              x = rng.uniform();
              y = rng.uniform();
              if (x + y > 1.0) {
                x = 1.0 - x;
                y = 1.0 - y;
              }
            } while (1.0 - x <= 1e-6 || 1.0 - y <= 1e-6);
          }
          return Json{{"x", x}, {"y", y}, {"beta", beta}};
        },
        [](const Json& in) {
          const double x = in.at("x").get<double>();
          const double y = in.at("y").get<double>();
          const BetaOrder beta(in.at("beta").get<double>());
          const double b = beta.value();
          auto f = [&](double t) { return info_function_beta(std::clamp(t, 0.0, 1.0), beta); };
          const double lhs = f(x) + std::pow(1.0 - x, b) * f(y / (1.0 - x));
          const double rhs = f(y) + std::pow(1.0 - y, b) * f(x / (1.0 - y));
          return identity_report("f(x) + (1-x)^b f(y/(1-x)) = f(y) + (1-y)^b f(x/(1-y))", lhs, rhs, 1e-9);
        }};

    s["eq4_roundtrip"] = {
        1e-10,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t n = cycled_dim(index);
          const std::size_t zeros = static_cast<std::size_t>(rng.below(n));
          const ProbabilityVector p = inject ? uniform_simplex(n, zeros) : random_simplex(n, rng, zeros);
          return Json{{"dist", distribution_json(p)}, {"beta", cycled_order(index, any_order)}};
        },
        [](const Json& in) {
          const ProbabilityVector p = distribution_from(in.at("dist"));
          const BetaOrder beta(in.at("beta").get<double>());
          return identity_report("order_from_type(H^beta) = H_beta", order_from_type(entropy_type_beta(p, beta), beta),
                                 renyi_entropy(p, beta), 1e-10);
        }};

    s["diag_oracle"] = {
        1e-10,
        [](std::uint64_t index, Rng& rng, bool inject) {
          const std::size_t n = 2 + index % 7;
          const ProbabilityVector p = inject ? uniform_simplex(n, 0) : random_simplex(n, rng, 0);
          if (index % 2 == 0)
            return Json{{"kind", "entropy"}, {"dist", distribution_json(p)}, {"alpha", cycled_order(index, any_order)}};
          const ProbabilityVector q = inject ? p : random_simplex(n, rng, 0);
          return Json{{"kind", "divergence"},
                      {"dist", distribution_json(p)},
                      {"ref", distribution_json(q)},
                      {"alpha", cycled_order(index, above_one)}};
        },
        [](const Json& in) {
          const ProbabilityVector p = distribution_from(in.at("dist"));
          const double alpha = in.at("alpha").get<double>();
          const DensityMatrix rho(HermitianMatrix::diagonal(p.values()));
          if (in.at("kind") == "entropy") {
            const double quantum = quantum_renyi_entropy(rho, alpha, Units::Nats).value;
            const double classical = renyi_entropy(p, BetaOrder(alpha)) * std::log(2.0);
            return identity_report("H_alpha(diag p) = H_alpha(p)", quantum, classical, 1e-10);
          }
          const ProbabilityVector q = distribution_from(in.at("ref"));
          double s = 0.0;
          for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] > 0.0) s += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
          const double classical = std::log(s) / (alpha - 1.0);
          const double quantum = renyi_relative_entropy(rho, HermitianMatrix::diagonal(q.values()), alpha).value;
          BoundReport r = identity_report("D_alpha(diag p || diag q) = D_alpha(p || q)", quantum, classical, 1e-10);
          return r;
        }};

    return s;
  }();
  return suites;
}

const Suite& find_suite(std::string_view name) {
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(name) + "'", "suite");
  return it->second;
}

bool injected(std::uint64_t index) { return index % 100 == 50; }

Json generate(const Suite& suite, Seed seed, std::uint64_t index) {
  Rng rng(substream(seed, index));
  return suite.generate(index, rng, injected(index));
}

BoundReport evaluate_guarded(const Suite& suite, const Json& input) {
  try {
    return suite.evaluate(input);
  } catch (const Error& e) {
    BoundReport r;
    r.relation = std::string("error ") + std::string(to_string(e.code())) + ": " + e.what();
    r.violation = INFINITY;
    r.gap = -INFINITY;
    r.tolerance = suite.tolerance;
    return r;
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma2", "lemma3",   "lemma4",     "t1",
                                                 "t2_2",   "t3",       "t3_2",       "t4",
                                                 "t6",     "triangle", "info_fn_eq", "eq4_roundtrip",
                                                 "diag_oracle"};
  return names;
}

SuiteReport run_suite(std::string_view name, std::size_t trials, Seed seed) {
  const Suite& suite = find_suite(name);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed.value;
  report.trials = trials;
  report.tolerance = suite.tolerance;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Json input = generate(suite, seed, i);
    const BoundReport r = evaluate_guarded(suite, input);
    report.max_violation = std::max(report.max_violation, r.violation);
    if (!r.pass) report.failures.push_back({i, io::serialize(input), r});
    if (injected(i)) {
      ++report.equality_injected;
      if (r.equality) ++report.equality_flagged;
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

BoundReport replay_trial(std::string_view name, const std::string& input) {
  const Suite& suite = find_suite(name);
  return evaluate_guarded(suite, io::parse(input));
}

std::string trial_input(std::string_view name, Seed seed, std::uint64_t index) {
  return io::serialize(generate(find_suite(name), seed, index));
}

}  // namespace renyi
