// Copyright 2026 The pacsets Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PACSETS_HARNESS_H_
#define PACSETS_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pacsets/evaluation.h"
#include "pacsets/learners.h"
#include "pacsets/losses.h"
#include "pacsets/oracle.h"
#include "pacsets/world.h"

namespace pacsets {

inline constexpr int kConfigSchemaVersion = 1;

struct LearnerSpec {
  std::string name;   // registry key, e.g. "modified_ml"
  std::string label;  // column value in outputs; defaults to name
  nlohmann::json params = nlohmann::json::object();
};

struct ExperimentConfig {
  int schema_version = kConfigSchemaVersion;
  std::string experiment;
  WorldSpec world;
  // Draw a fresh world seed for every trial index (shared across m).
  bool resample_world = false;
  std::vector<LearnerSpec> learners;
  std::vector<std::size_t> m_schedule;  // strictly increasing
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  EvalMode eval_mode = EvalMode::kAuto;
  std::size_t mc_inputs = 100000;
  // A trial succeeds when both expected losses are <= this.
  double success_epsilon = 0.1;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::string output;       // default output directory; CLI --out wins
};
void to_json(nlohmann::json& j, const ExperimentConfig& c);
// Validates; throws InvalidArgument with the offending field.
void from_json(const nlohmann::json& j, ExperimentConfig& c);
ExperimentConfig LoadConfig(const std::filesystem::path& path);

std::vector<std::string> LearnerNames();

// Runs one registered learner. Parameter handling per learner:
//   modified_ml: r (number, or {"from": "best_scalar_member"}), delta, slack
//   semi_realizable: tol (default 0)
//   surrogate_realizable: epsilon (default 0.1)
// Throws InvalidArgument for unknown names or parameters.
LearnerOutput RunLearner(const LearnerSpec& spec, const World& world, const TrainingSet& data);

enum class TrialStatus { kOk, kFailed, kFailedRetryable };
std::string StatusName(TrialStatus status);

struct TrialRecord {
  std::string experiment;
  std::string learner;
  std::size_t m = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;        // derived seed of this (m, trial)
  std::uint64_t world_seed = 0;
  TrialStatus status = TrialStatus::kOk;
  std::string message;  // failure text
  std::string chosen_id;
  LossReport expected;   // NaN when failed
  LossReport empirical;  // on the training inputs; NaN when failed
  bool expected_exact = false;
  double wall_ms = 0.0;  // diagnostics only; never emitted to CSV
};

// The stream for (experiment, m, trial). Adding trials or m values leaves
// every existing stream unchanged.
RandomStream TrialStream(std::uint64_t root_seed, const std::string& experiment, std::size_t m,
                         std::size_t trial);
std::uint64_t TrialWorldSeed(const ExperimentConfig& config, std::size_t trial);

// Records ordered by (m, trial, learner order), independent of threads.
std::vector<TrialRecord> RunExperiment(const ExperimentConfig& config);

struct GroupSummary {
  std::string learner;
  std::size_t m = 0;
  std::size_t trials = 0;
  std::size_t ok = 0;
  double mean_precision_loss = 0.0;  // over ok trials
  double mean_recall_loss = 0.0;
  double mean_scalar_loss = 0.0;
  std::size_t successes = 0;  // ok and both losses <= epsilon
  double success_fraction = 0.0;
  double ci_low = 0.0;  // Wilson 95% interval
  double ci_high = 0.0;

  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};
struct Summary {
  std::string experiment;
  double success_epsilon = 0.0;
  std::vector<GroupSummary> groups;  // by learner order of appearance, then m

  friend bool operator==(const Summary&, const Summary&) = default;
};
void to_json(nlohmann::json& j, const GroupSummary& g);
void from_json(const nlohmann::json& j, GroupSummary& g);
void to_json(nlohmann::json& j, const Summary& s);
void from_json(const nlohmann::json& j, Summary& s);

// Wilson score interval at z = 1.96.
std::pair<double, double> WilsonInterval(std::size_t successes, std::size_t n);

Summary Summarize(const std::vector<TrialRecord>& records, double success_epsilon);

// Columns: experiment, learner, m, trial, precision_loss, recall_loss,
// scalar_loss, chosen_id, seed, status. Failed rows leave the loss and
// chosen_id fields empty. LF line ends, header row first.
std::string FormatCsv(const std::vector<TrialRecord>& records);
// Throws InvalidArgument on empty records, Error on an unwritable path.
void WriteCsv(const std::vector<TrialRecord>& records, const std::filesystem::path& path);
void WriteSummary(const Summary& summary, const std::filesystem::path& path);

struct VerifierEntry {
  std::string name;
  std::function<VerificationReport(std::size_t trials, RandomStream& rng)> run;
};
std::vector<VerifierEntry> DefaultVerifiers();

struct AggregateReport {
  std::vector<VerificationReport> reports;
  bool pass() const;
};
void to_json(nlohmann::json& j, const AggregateReport& r);

// Each verifier gets its own stream split from seed by name.
AggregateReport VerifyAll(std::size_t trials, std::uint64_t seed,
                          const std::vector<VerifierEntry>& verifiers = DefaultVerifiers());

}  // namespace pacsets

#endif  // PACSETS_HARNESS_H_
