#include "renyi_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "renyi/classical_entropy.hpp"
#include "renyi/divergence.hpp"
#include "renyi/error.hpp"
#include "renyi/generators.hpp"
#include "renyi/harness.hpp"
#include "renyi/io.hpp"
#include "renyi/matrix_inequalities.hpp"
#include "renyi/quantum_entropy.hpp"
#include "renyi/tolerances.hpp"

namespace renyi::cli {

namespace {

using io::Json;

std::string fmt(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Text rendering of a JSON report: scalars as "key: value", nested objects
// flattened with dots, arrays of scalars inline, arrays of arrays one row per line.
void render_value(const Json& v, std::ostream& out) {
  if (v.is_number()) {
    out << fmt(v.get<double>());
  } else if (v.is_boolean()) {
    out << (v.get<bool>() ? "true" : "false");
  } else if (v.is_string()) {
    out << v.get<std::string>();
  } else if (v.is_null()) {
    out << "none";
  } else if (v.is_array()) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ", ";
      render_value(v[i], out);
    }
    out << ']';
  } else {
    out << v.dump();
  }
}

void render(const Json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, v] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      render(v, name, out);
    } else if (v.is_array() && !v.empty() && v[0].is_array() && v[0].size() > 0 && v[0][0].is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << name << '[' << i << "]: ";
        render_value(v[i], out);
        out << '\n';
      }
    } else {
      out << name << ": ";
      render_value(v, out);
      out << '\n';
    }
  }
}

Json report_json(const BoundReport& r) {
  Json j;
  j["relation"] = r.relation;
  j["lhs"] = r.lhs;
  if (r.mid) j["mid"] = *r.mid;
  j["rhs"] = r.rhs;
  j["gap"] = r.gap;
  j["violation"] = r.violation;
  j["pass"] = r.pass;
  j["equality"] = r.equality;
  j["tolerance"] = r.tolerance;
  return j;
}

Json matrix_json(const HermitianMatrix& m) { return io::to_json(io::matrix_file(m))["matrix"]; }

Json tolerances_json() {
  Json j;
  j["hermitian"] = tol::kHermitian;
  j["psd"] = tol::kPsd;
  j["zero"] = tol::kZero;
  j["trace"] = tol::kTrace;
  j["chain"] = tol::kChain;
  j["equality"] = tol::kEquality;
  j["optimizer"] = tol::kOptimizer;
  return j;
}

struct Options {
  std::string dist, state, rho, sigma, a_file, b_file, out_path;
  std::string units;
  std::string dims;
  std::string bound_id, suite, kind, mode = "mutual";
  std::optional<double> alpha, beta;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t dim = 0;
  std::optional<std::size_t> rank;
  std::size_t zeros = 0;
  double cap = 100.0;
  int restarts = 5;
  bool json = false;
};

std::optional<BipartiteDims> parse_dims(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  auto bad = [] { return Error(ErrorCode::DimensionMismatch, "--dims expects dA,dB", "dims"); };
  if (comma == std::string::npos) throw bad();
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string sa = text.substr(0, comma), sb = text.substr(comma + 1);
    const unsigned long a = std::stoul(sa, &used_a), b = std::stoul(sb, &used_b);
    if (used_a != sa.size() || used_b != sb.size() || a == 0 || b == 0) throw bad();
    return BipartiteDims{a, b};
  } catch (const std::logic_error&) {
    throw bad();
  }
}

HermitianMatrix load_hermitian(const std::string& path, Json* echo = nullptr,
                               std::optional<BipartiteDims>* file_dims = nullptr) {
  const io::MatrixFile f = io::read_matrix_file(path, io::max_dim_from_env());
  if (echo) *echo = io::to_json(f);
  if (file_dims) *file_dims = f.dims;
  try {
    return HermitianMatrix(f.matrix);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), path);
  }
}

DensityMatrix load_state(const std::string& path, const std::string& dims_flag, Json* echo) {
  std::optional<BipartiteDims> file_dims;
  HermitianMatrix m = load_hermitian(path, echo, &file_dims);
  std::optional<BipartiteDims> dims = parse_dims(dims_flag);
  if (!dims) dims = file_dims;
  return DensityMatrix(std::move(m), dims);
}

ProbabilityVector load_distribution(const std::string& path, Json* echo) {
  io::DistributionFile f = io::read_distribution_file(path);
  if (echo) *echo = io::to_json(f);
  return ProbabilityVector(std::move(f.p));
}

double require(const std::optional<double>& v, const char* name) {
  if (!v) throw CLI::RequiredError(std::string("--") + name);
  return *v;
}

void require_path(const std::string& v, const char* name) {
  if (v.empty()) throw CLI::RequiredError(std::string("--") + name);
}

Units units_or(const std::string& flag, Units fallback) {
  if (flag.empty()) return fallback;
  return flag == "bits" ? Units::Bits : Units::Nats;
}

const char* units_name(Units u) { return u == Units::Bits ? "bits" : "nats"; }

double in_units(double nats, Units u) { return u == Units::Bits ? nats / std::log(2.0) : nats; }

// --- commands ----------------------------------------------------------------

Json cmd_entropy_classical(const Options& o) {
  require_path(o.dist, "dist");
  Json echo;
  const ProbabilityVector p = load_distribution(o.dist, &echo);
  const BetaOrder beta(require(o.beta, "beta"));
  const Units units = units_or(o.units, Units::Bits);
  const double bits = renyi_entropy(p, beta);
  Json j;
  j["command"] = "entropy classical";
  j["input"] = {{"dist", o.dist}, {"p", echo["p"]}, {"beta", beta.value()}};
  j["value"] = units == Units::Bits ? bits : bits * std::log(2.0);
  j["units"] = units_name(units);
  j["beta"] = beta.value();
  j["tolerances"] = tolerances_json();
  return j;
}

Json cmd_entropy_quantum(const Options& o) {
  require_path(o.state, "state");
  Json echo;
  const DensityMatrix rho = load_state(o.state, o.dims, &echo);
  const double alpha = require(o.alpha, "alpha");
  const Units units = units_or(o.units, Units::Nats);
  const EntropyValue h = quantum_renyi_entropy(rho, alpha, units);
  Json j;
  j["command"] = "entropy quantum";
  j["input"] = {{"state", o.state}, {"file", echo}, {"alpha", alpha}};
  j["value"] = h.value;
  j["units"] = units_name(units);
  j["alpha"] = alpha;
  j["tolerances"] = tolerances_json();
  return j;
}

Json cmd_type_beta(const Options& o) {
  require_path(o.dist, "dist");
  Json echo;
  const ProbabilityVector p = load_distribution(o.dist, &echo);
  const BetaOrder beta(require(o.beta, "beta"));
  const double h = entropy_type_beta(p, beta);
  Json j;
  j["command"] = "type-beta";
  j["input"] = {{"dist", o.dist}, {"p", echo["p"]}, {"beta", beta.value()}};
  j["value"] = h;
  j["beta"] = beta.value();
  j["order_bits"] = order_from_type(h, beta);
  j["tolerances"] = tolerances_json();
  return j;
}

Json cmd_divergence(const Options& o) {
  require_path(o.rho, "rho");
  require_path(o.sigma, "sigma");
  Json rho_echo, sigma_echo;
  const DensityMatrix rho = load_state(o.rho, "", &rho_echo);
  const HermitianMatrix sigma =
      o.sigma == "identity" ? HermitianMatrix::identity(rho.dim()) : load_hermitian(o.sigma, &sigma_echo);
  if (o.sigma == "identity") sigma_echo = "identity";
  const double alpha = require(o.alpha, "alpha");
  const Units units = units_or(o.units, Units::Nats);
  const DivergenceResult d = renyi_relative_entropy(rho, sigma, alpha);
  Json j;
  j["command"] = "divergence";
  j["input"] = {{"rho", rho_echo}, {"sigma", sigma_echo}, {"alpha", alpha}};
  j["value"] = in_units(d.value, units);
  j["units"] = units_name(units);
  j["alpha"] = alpha;
  j["equality_case"] = d.equality_case;
  j["tolerances"] = tolerances_json();
  return j;
}

OptimizerOptions optimizer_options(const Options& o) {
  OptimizerOptions opts;
  opts.restarts = o.restarts;
  return opts;
}

Json cmd_optimized(const Options& o, bool conditional) {
  require_path(o.state, "state");
  Json echo;
  const DensityMatrix rho = load_state(o.state, o.dims, &echo);
  const double alpha = require(o.alpha, "alpha");
  const Units units = units_or(o.units, Units::Nats);
  const OptimizedValue v = conditional ? conditional_entropy(rho, alpha, optimizer_options(o))
                                       : mutual_information(rho, alpha, optimizer_options(o));
  Json j;
  j["command"] = conditional ? "conditional" : "mutual-info";
  j["input"] = {{"state", o.state}, {"file", echo}, {"dims", {rho.dims()->a, rho.dims()->b}}, {"alpha", alpha}};
  j["value"] = in_units(v.value, units);
  j["units"] = units_name(units);
  j["alpha"] = alpha;
  j["optimum_divergence"] = v.outcome.optimum_value;
  j["sigma_b"] = matrix_json(v.outcome.optimizer_sigma.matrix());
  j["iterations"] = v.outcome.iterations;
  j["restarts"] = v.outcome.restarts_used;
  j["converged"] = v.outcome.converged;
  j["tolerances"] = tolerances_json();
  return j;
}

Json cmd_bounds(const Options& o) {
  const std::string& id = o.bound_id;
  Json j;
  j["command"] = "bounds";
  j["bound"] = id;
  Json input;
  if (id == "lemma2" || id == "lemma3") {
    require_path(o.a_file, "a");
    require_path(o.b_file, "b");
    Json ea, eb;
    const HermitianMatrix a = load_hermitian(o.a_file, &ea), b = load_hermitian(o.b_file, &eb);
    input = {{"a", ea}, {"b", eb}};
    j["report"] = report_json(id == "lemma2" ? lemma2_check(a, b) : lemma3_check(a, b));
  } else if (id == "lemma4") {
    require_path(o.a_file, "a");
    Json ea;
    const HermitianMatrix a = load_hermitian(o.a_file, &ea);
    input = {{"a", ea}};
    j["report"] = report_json(lemma4_check(a));
  } else if (id == "t1" || id == "t2_2") {
    require_path(o.dist, "dist");
    Json echo;
    const ProbabilityVector p = load_distribution(o.dist, &echo);
    const BetaOrder beta(require(o.beta, "beta"));
    input = {{"p", echo["p"]}, {"beta", beta.value()}};
    if (id == "t1") {
      j["bound_value"] = t1_bound(p, beta);
      j["report"] = report_json(t1_check(p, beta));
    } else {
      j["bound_value"] = type_beta_upper_bound(p, beta);
      j["report"] = report_json(t2_2_check(p, beta));
    }
  } else if (id == "t3") {
    require_path(o.state, "state");
    Json echo;
    const DensityMatrix rho = load_state(o.state, "", &echo);
    const double alpha = require(o.alpha, "alpha");
    const Units units = units_or(o.units, Units::Nats);
    const T3Report r = t3_bound(rho, alpha, units);
    input = {{"state", echo}, {"alpha", alpha}};
    j["units"] = units_name(units);
    j["entropy"] = r.entropy;
    j["bound_value"] = r.bound;
    j["log_dim"] = r.log_dim;
    j["zero_count"] = r.zero_count;
    j["report"] = report_json(r.spectral);
    j["cap"] = report_json(r.cap);
    if (r.sandwich) j["sandwich"] = report_json(*r.sandwich);
  } else if (id == "t4" || id == "triangle" || id == "equality") {
    require_path(o.rho, "rho");
    require_path(o.sigma, "sigma");
    Json er, es;
    const DensityMatrix rho = load_state(o.rho, "", &er);
    const HermitianMatrix sigma = load_hermitian(o.sigma, &es);
    const double alpha = require(o.alpha, "alpha");
    input = {{"rho", er}, {"sigma", es}, {"alpha", alpha}};
    if (id == "equality") {
      const EqualityCondition e = equality_condition_check(rho, sigma, alpha);
      j["holds"] = e.holds;
      j["c"] = e.c;
    } else {
      j["report"] = report_json(id == "t4" ? t4_lower_bound(rho, sigma, alpha) : triangle_bound_check(rho, sigma, alpha));
    }
  } else if (id == "t5" || id == "t6") {
    require_path(o.state, "state");
    Json echo;
    const DensityMatrix rho = load_state(o.state, o.dims, &echo);
    const double alpha = require(o.alpha, "alpha");
    input = {{"state", echo}, {"alpha", alpha}};
    if (id == "t5") {
      if (o.mode != "mutual" && o.mode != "conditional")
        throw CLI::ValidationError("--mode", "must be mutual or conditional");
      input["mode"] = o.mode;
      const auto v = t5_closed_form(rho, alpha, o.mode == "mutual" ? T5Mode::Mutual : T5Mode::Conditional);
      j["applies"] = v.has_value();
      if (v) {
        j["value"] = v->value;
        j["c"] = v->c;
        j["sigma_b"] = matrix_json(v->sigma_b);
      }
    } else {
      const OptimizedValue mi = mutual_information(rho, alpha, optimizer_options(o));
      j["bound_value"] = t6_bound_value(rho, alpha);
      j["mutual_information"] = mi.value;
      j["report"] = report_json(t6_lower_bound(rho, alpha, mi.value));
    }
  } else {
    throw CLI::ValidationError("bound id",
                               "unknown bound '" + id + "' (lemma2 lemma3 lemma4 t1 t2_2 t3 t4 equality triangle t5 t6)");
  }
  j["input"] = input;
  j["tolerances"] = tolerances_json();
  return j;
}

Json cmd_verify(const Options& o, std::ostream& err) {
  const SuiteReport r = run_suite(o.suite, o.trials, Seed{o.seed});
  err << "elapsed: " << fmt(r.elapsed.count()) << " s\n";
  Json j;
  j["command"] = "verify";
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["tolerance"] = r.tolerance;
  j["failure_count"] = r.failures.size();
  j["max_violation"] = r.max_violation;
  j["equality_injected"] = r.equality_injected;
  j["equality_flagged"] = r.equality_flagged;
  j["status"] = r.failures.empty() ? "PASS" : "FAIL";
  Json failures = Json::array();
  for (const FailureRecord& f : r.failures)
    failures.push_back({{"trial", f.trial}, {"input", io::parse(f.input)}, {"report", report_json(f.report)}});
  j["failures"] = failures;
  return j;
}

Json cmd_gen(const Options& o, std::ostream& out) {
  const Seed seed{o.seed};
  std::string text;
  if (o.kind == "density") {
    DensityMatrix rho = random_density(o.dim, seed, o.rank);
    const auto dims = parse_dims(o.dims);
    text = io::serialize(io::to_json(io::matrix_file(rho.matrix(), dims)));
  } else if (o.kind == "pd") {
    text = io::serialize(io::to_json(io::matrix_file(random_pd(o.dim, seed, o.cap))));
  } else if (o.kind == "simplex") {
    const ProbabilityVector p = random_simplex(o.dim, seed, o.zeros);
    text = io::serialize(io::to_json(io::DistributionFile{{p.values().begin(), p.values().end()}}));
  } else {
    throw Error(ErrorCode::BadKind, "kind must be density, pd or simplex", "kind");
  }
  if (o.out_path.empty() || o.out_path == "-") {
    out << text;
    return nullptr;
  }
  io::write_text(o.out_path, text);
  Json j;
  j["command"] = "gen";
  j["kind"] = o.kind;
  j["dim"] = o.dim;
  j["seed"] = o.seed;
  j["out"] = o.out_path;
  return j;
}

void emit(const Json& j, bool json, std::ostream& out) {
  if (j.is_null()) return;
  if (json) {
    out << j.dump(2) << '\n';
    return;
  }
  Json shown = j;
  shown.erase("input");
  shown.erase("tolerances");
  shown.erase("command");
  if (shown.contains("failures") && shown["failures"].empty()) shown.erase("failures");
  render(shown, "", out);
}

void add_units(CLI::App* app, Options& o) {
  app->add_option("--units", o.units, "bits or nats")->check(CLI::IsMember({"bits", "nats"}));
}

void add_json(CLI::App* app, Options& o) { app->add_flag("--json", o.json, "structured report"); }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Renyi entropy and divergence calculator", "renyi"};
  app.require_subcommand(1);
  Options o;
  std::function<Json()> action;

  auto* entropy = app.add_subcommand("entropy", "Renyi entropy of a distribution or a state");
  entropy->require_subcommand(1);
  auto* classical = entropy->add_subcommand("classical", "entropy of order beta, in bits by default");
  classical->add_option("--dist", o.dist, "distribution file")->required();
  classical->add_option("--beta", o.beta, "order")->required();
  add_units(classical, o);
  add_json(classical, o);
  classical->callback([&] { action = [&] { return cmd_entropy_classical(o); }; });

  auto* quantum = entropy->add_subcommand("quantum", "entropy of a density matrix, in nats by default");
  quantum->add_option("--state", o.state, "matrix file")->required();
  quantum->add_option("--alpha", o.alpha, "order")->required();
  quantum->add_option("--dims", o.dims, "dA,dB");
  add_units(quantum, o);
  add_json(quantum, o);
  quantum->callback([&] { action = [&] { return cmd_entropy_quantum(o); }; });

  auto* type_beta = app.add_subcommand("type-beta", "entropy of type beta");
  type_beta->add_option("--dist", o.dist, "distribution file")->required();
  type_beta->add_option("--beta", o.beta, "order")->required();
  add_json(type_beta, o);
  type_beta->callback([&] { action = [&] { return cmd_type_beta(o); }; });

  auto* divergence = app.add_subcommand("divergence", "Renyi relative entropy D_alpha(rho||sigma)");
  divergence->add_option("--rho", o.rho, "matrix file")->required();
  divergence->add_option("--sigma", o.sigma, "matrix file, or 'identity'")->required();
  divergence->add_option("--alpha", o.alpha, "order")->required();
  add_units(divergence, o);
  add_json(divergence, o);
  divergence->callback([&] { action = [&] { return cmd_divergence(o); }; });

  for (const bool conditional : {true, false}) {
    auto* sub = app.add_subcommand(conditional ? "conditional" : "mutual-info",
                                   conditional ? "conditional entropy H_alpha(A|B)" : "mutual information I_alpha(A;B)");
    sub->add_option("--state", o.state, "matrix file")->required();
    sub->add_option("--alpha", o.alpha, "order > 1")->required();
    sub->add_option("--dims", o.dims, "dA,dB (overrides the file)");
    sub->add_option("--restarts", o.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
    add_units(sub, o);
    add_json(sub, o);
    sub->callback([&, conditional] { action = [&, conditional] { return cmd_optimized(o, conditional); }; });
  }

  auto* bounds = app.add_subcommand("bounds", "evaluate one inequality on the given inputs");
  bounds->add_option("id", o.bound_id, "lemma2 lemma3 lemma4 t1 t2_2 t3 t4 equality triangle t5 t6")->required();
  bounds->add_option("--a", o.a_file, "matrix file A");
  bounds->add_option("--b", o.b_file, "matrix file B");
  bounds->add_option("--dist", o.dist, "distribution file");
  bounds->add_option("--beta", o.beta, "classical order");
  bounds->add_option("--state", o.state, "matrix file");
  bounds->add_option("--rho", o.rho, "matrix file");
  bounds->add_option("--sigma", o.sigma, "matrix file");
  bounds->add_option("--alpha", o.alpha, "quantum order");
  bounds->add_option("--dims", o.dims, "dA,dB");
  bounds->add_option("--mode", o.mode, "mutual or conditional (t5)");
  bounds->add_option("--restarts", o.restarts, "optimizer restarts (t6)")->check(CLI::PositiveNumber);
  add_units(bounds, o);
  add_json(bounds, o);
  bounds->callback([&] { action = [&] { return cmd_bounds(o); }; });

  auto* verify = app.add_subcommand("verify", "run a randomized property suite");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", o.trials, "number of trials");
  verify->add_option("--seed", o.seed, "64-bit seed");
  add_json(verify, o);
  verify->callback([&] { action = [&] { return cmd_verify(o, err); }; });

  auto* gen = app.add_subcommand("gen", "write a random instance file");
  gen->add_option("kind", o.kind, "density, pd or simplex")->required();
  gen->add_option("--dim", o.dim, "dimension (entries for simplex)")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "64-bit seed")->required();
  gen->add_option("--out", o.out_path, "output path; stdout when omitted");
  gen->add_option("--rank", o.rank, "rank (density)");
  gen->add_option("--zeros", o.zeros, "forced zero entries (simplex)");
  gen->add_option("--cap", o.cap, "condition number cap (pd)");
  gen->add_option("--dims", o.dims, "dA,dB recorded in the file (density)");
  add_json(gen, o);
  gen->callback([&] { action = [&] { return cmd_gen(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    emit(action(), o.json, out);
    return 0;
  } catch (const Error& e) {
    Json j;
    j["code"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    j["offending_field"] = e.field();
    err << j.dump() << '\n';
    return 1;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace renyi::cli
