#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "renyi/bound_report.hpp"
#include "renyi/rng.hpp"

namespace renyi {

struct FailureRecord {
  std::uint64_t trial = 0;
  std::string input;  // serialized JSON, replayable with replay_trial
  BoundReport report;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double tolerance = 0.0;
  std::vector<FailureRecord> failures;
  double max_violation = 0.0;
  std::size_t equality_injected = 0;
  std::size_t equality_flagged = 0;  // injected instances that raised the flag
  std::chrono::duration<double> elapsed{};
};

// Registry order: lemma2, lemma3, lemma4, t1, t2_2, t3, t3_2, t4, t6,
// triangle, info_fn_eq, eq4_roundtrip, diag_oracle.
const std::vector<std::string>& suite_names();

// Runs `trials` independent instances; trial i draws from substream(seed, i).
// Every 100th trial (index % 100 == 50) is a constructed equality case.
// Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, std::size_t trials, Seed seed);

// Re-evaluates one serialized trial input.
BoundReport replay_trial(std::string_view name, const std::string& input);

// Serialized input of trial `index` exactly as run_suite generates it.
std::string trial_input(std::string_view name, Seed seed, std::uint64_t index);

}  // namespace renyi
