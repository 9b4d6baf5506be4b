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

#include "pacsets/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "pacsets/errors.h"
#include "pacsets/surrogate.h"

namespace pacsets {
namespace {

using json = nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::map<std::string, std::set<std::string>>& LearnerParamKeys() {
  static const auto* keys = new std::map<std::string, std::set<std::string>>{
      {"erm_consistent", {}},
      {"ml_realizable", {}},
      {"modified_ml", {"r", "delta", "slack"}},
      {"semi_realizable", {"tol"}},
      {"surrogate_realizable", {"epsilon"}},
      {"surrogate_agnostic", {}},
  };
  return *keys;
}

std::string ModeName(EvalMode mode) {
  switch (mode) {
    case EvalMode::kExact:
      return "exact";
    case EvalMode::kMonteCarlo:
      return "monte_carlo";
    case EvalMode::kAuto:
      break;
  }
  return "auto";
}

EvalMode ParseMode(const std::string& s) {
  if (s == "exact") return EvalMode::kExact;
  if (s == "monte_carlo") return EvalMode::kMonteCarlo;
  if (s == "auto") return EvalMode::kAuto;
  throw InvalidArgument("config: evaluation.mode must be exact, monte_carlo or auto");
}

double ResolveRecallTarget(const json& r, const World& world) {
  if (r.is_number()) return r.get<double>();
  if (r.is_object() && r.value("from", std::string()) == "best_scalar_member") {
    return ReferenceFor(world.hypotheses(), world).r;
  }
  throw InvalidArgument(
      "modified_ml: r must be a number or {\"from\": \"best_scalar_member\"}");
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Real(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

LossReport NaNReport() { return {kNaN, kNaN, kNaN}; }

void WriteText(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

void to_json(json& j, const ExperimentConfig& c) {
  json learners = json::array();
  for (const auto& l : c.learners) {
    learners.push_back({{"name", l.name}, {"label", l.label}, {"params", l.params}});
  }
  j = json{{"schema_version", c.schema_version},
           {"experiment", c.experiment},
           {"world", c.world},
           {"resample_world", c.resample_world},
           {"learners", learners},
           {"m_schedule", c.m_schedule},
           {"trials", c.trials},
           {"seed", c.seed},
           {"evaluation", {{"mode", ModeName(c.eval_mode)}, {"mc_inputs", c.mc_inputs}}},
           {"success_epsilon", c.success_epsilon},
           {"threads", c.threads},
           {"output", c.output}};
}

void from_json(const json& j, ExperimentConfig& c) {
  if (!j.is_object()) throw InvalidArgument("config: top level must be an object");
  c = ExperimentConfig{};
  c.schema_version = j.value("schema_version", kConfigSchemaVersion);
  if (c.schema_version != kConfigSchemaVersion) {
    throw InvalidArgument("config: unsupported schema_version " + std::to_string(c.schema_version));
  }
  if (!j.contains("experiment") || !j.contains("world") || !j.contains("learners") ||
      !j.contains("m_schedule")) {
    throw InvalidArgument("config: experiment, world, learners and m_schedule are required");
  }
  j.at("experiment").get_to(c.experiment);
  if (c.experiment.empty()) throw InvalidArgument("config: experiment must be non-empty");
  j.at("world").get_to(c.world);
  c.resample_world = j.value("resample_world", false);

  std::set<std::string> labels;
  for (const auto& entry : j.at("learners")) {
    LearnerSpec spec;
    if (entry.is_string()) {
      spec.name = entry.get<std::string>();
    } else {
      entry.at("name").get_to(spec.name);
      spec.label = entry.value("label", std::string());
      spec.params = entry.value("params", json::object());
    }
    if (spec.label.empty()) spec.label = spec.name;
    auto known = LearnerParamKeys().find(spec.name);
    if (known == LearnerParamKeys().end()) {
      throw InvalidArgument("config: unknown learner '" + spec.name + "'");
    }
    for (const auto& [key, value] : spec.params.items()) {
      if (!known->second.contains(key)) {
        throw InvalidArgument("config: learner '" + spec.name + "' has no parameter '" + key + "'");
      }
    }
    if (!labels.insert(spec.label).second) {
      throw InvalidArgument("config: duplicate learner label '" + spec.label + "'");
    }
    c.learners.push_back(std::move(spec));
  }
  if (c.learners.empty()) throw InvalidArgument("config: at least one learner is required");

  j.at("m_schedule").get_to(c.m_schedule);
  if (c.m_schedule.empty()) throw InvalidArgument("config: m_schedule must be non-empty");
  for (std::size_t k = 0; k < c.m_schedule.size(); ++k) {
    if (c.m_schedule[k] == 0) throw InvalidArgument("config: m values must be >= 1");
    if (k > 0 && c.m_schedule[k] <= c.m_schedule[k - 1]) {
      throw InvalidArgument("config: m_schedule must be strictly increasing");
    }
  }
  c.trials = j.value("trials", std::size_t{1});
  if (c.trials == 0) throw InvalidArgument("config: trials must be >= 1");
  c.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("evaluation")) {
    const json& e = j.at("evaluation");
    c.eval_mode = ParseMode(e.value("mode", std::string("auto")));
    c.mc_inputs = e.value("mc_inputs", c.mc_inputs);
  }
  c.success_epsilon = j.value("success_epsilon", c.success_epsilon);
  c.threads = j.value("threads", std::size_t{0});
  c.output = j.value("output", std::string());
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("config '" + path.string() + "': " + e.what());
  }
  try {
    return j.get<ExperimentConfig>();
  } catch (const json::exception& e) {
    throw InvalidArgument("config '" + path.string() + "': " + e.what());
  }
}

std::vector<std::string> LearnerNames() {
  std::vector<std::string> names;
  for (const auto& [name, keys] : LearnerParamKeys()) names.push_back(name);
  return names;
}

LearnerOutput RunLearner(const LearnerSpec& spec, const World& world, const TrainingSet& data) {
  const HypothesisClass& h = world.hypotheses();
  const json& p = spec.params;
  if (spec.name == "erm_consistent") return ErmConsistent(h, data);
  if (spec.name == "ml_realizable") return MlRealizable(h, data);
  if (spec.name == "modified_ml") {
    ModifiedMlParams params;
    params.r = ResolveRecallTarget(p.value("r", json(0.0)), world);
    params.delta = p.value("delta", params.delta);
    if (p.contains("slack")) params.slack = p.at("slack").get<double>();
    return ModifiedMl(h, data, params);
  }
  if (spec.name == "semi_realizable") return SemiRealizable(h, data, p.value("tol", 0.0));
  if (spec.name == "surrogate_realizable") {
    return SurrogateRealizable(h, data, p.value("epsilon", 0.1));
  }
  if (spec.name == "surrogate_agnostic") return SurrogateAgnostic(h, data);
  throw InvalidArgument("unknown learner '" + spec.name + "'");
}

std::string StatusName(TrialStatus status) {
  switch (status) {
    case TrialStatus::kOk:
      return "ok";
    case TrialStatus::kFailed:
      return "failed";
    case TrialStatus::kFailedRetryable:
      return "failed_retryable";
  }
  return "failed";
}

RandomStream TrialStream(std::uint64_t root_seed, const std::string& experiment, std::size_t m,
                         std::size_t trial) {
  return RandomStream(root_seed).Split(experiment).Split(m).Split(trial);
}

std::uint64_t TrialWorldSeed(const ExperimentConfig& config, std::size_t trial) {
  if (!config.resample_world) return config.world.seed;
  return RandomStream(config.seed).Split(config.experiment).Split("world").Split(trial).seed();
}

std::vector<TrialRecord> RunExperiment(const ExperimentConfig& config) {
  if (config.learners.empty() || config.m_schedule.empty() || config.trials == 0) {
    throw InvalidArgument("RunExperiment: config needs learners, m values and trials");
  }
  // Build once up front so a bad world spec fails fast.
  const WorldPtr shared = MakeWorld(config.world);
  const std::size_t num_learners = config.learners.size();
  const std::size_t tasks = config.m_schedule.size() * config.trials;
  std::vector<TrialRecord> records(tasks * num_learners);

  auto run_task = [&](std::size_t task) {
    const std::size_t m = config.m_schedule[task / config.trials];
    const std::size_t trial = task % config.trials;
    RandomStream stream = TrialStream(config.seed, config.experiment, m, trial);
    const std::uint64_t world_seed = TrialWorldSeed(config, trial);
    TrialRecord* row = &records[task * num_learners];
    for (std::size_t k = 0; k < num_learners; ++k) {
      row[k].experiment = config.experiment;
      row[k].learner = config.learners[k].label;
      row[k].m = m;
      row[k].trial = trial;
      row[k].seed = stream.seed();
      row[k].world_seed = world_seed;
      row[k].expected = NaNReport();
      row[k].empirical = NaNReport();
    }
    WorldPtr world = shared;
    TrainingSet data;
    try {
      if (config.resample_world) {
        WorldSpec spec = config.world;
        spec.seed = world_seed;
        world = MakeWorld(spec);
      }
      RandomStream sample_rng = stream.Split("sample");
      data = SampleTrainingSet(*world, m, sample_rng);
    } catch (const Error& e) {
      for (std::size_t k = 0; k < num_learners; ++k) {
        row[k].status = TrialStatus::kFailed;
        row[k].message = e.what();
      }
      return;
    }
    const std::vector<InputId> xs = data.inputs();
    for (std::size_t k = 0; k < num_learners; ++k) {
      const auto start = std::chrono::steady_clock::now();
      try {
        const LearnerOutput out = RunLearner(config.learners[k], *world, data);
        const Hypothesis& chosen = world->hypotheses()[out.chosen];
        RandomStream eval_rng = stream.Split("eval").Split(k);
        const LossEstimate est =
            ExpectedLosses(chosen, *world, config.eval_mode, config.mc_inputs, &eval_rng);
        row[k].chosen_id = out.chosen_id;
        row[k].expected = est.mean;
        row[k].expected_exact = est.exact;
        row[k].empirical = EmpiricalLosses(chosen, world->target_hypothesis(), xs);
      } catch (const LearnerFailure& e) {
        row[k].status = e.retryable() ? TrialStatus::kFailedRetryable : TrialStatus::kFailed;
        row[k].message = e.what();
      } catch (const Error& e) {
        row[k].status = TrialStatus::kFailed;
        row[k].message = e.what();
      }
      row[k].wall_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
  };

  std::size_t workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t task = next++; task < tasks; task = next++) {
      try {
        run_task(task);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

void to_json(json& j, const GroupSummary& g) {
  j = json{{"learner", g.learner},
           {"m", g.m},
           {"trials", g.trials},
           {"ok", g.ok},
           {"mean_precision_loss", g.mean_precision_loss},
           {"mean_recall_loss", g.mean_recall_loss},
           {"mean_scalar_loss", g.mean_scalar_loss},
           {"successes", g.successes},
           {"success_fraction", g.success_fraction},
           {"ci_low", g.ci_low},
           {"ci_high", g.ci_high}};
}

void from_json(const json& j, GroupSummary& g) {
  j.at("learner").get_to(g.learner);
  j.at("m").get_to(g.m);
  j.at("trials").get_to(g.trials);
  j.at("ok").get_to(g.ok);
  j.at("mean_precision_loss").get_to(g.mean_precision_loss);
  j.at("mean_recall_loss").get_to(g.mean_recall_loss);
  j.at("mean_scalar_loss").get_to(g.mean_scalar_loss);
  j.at("successes").get_to(g.successes);
  j.at("success_fraction").get_to(g.success_fraction);
  j.at("ci_low").get_to(g.ci_low);
  j.at("ci_high").get_to(g.ci_high);
}

void to_json(json& j, const Summary& s) {
  j = json{{"experiment", s.experiment},
           {"success_epsilon", s.success_epsilon},
           {"groups", s.groups}};
}

void from_json(const json& j, Summary& s) {
  j.at("experiment").get_to(s.experiment);
  j.at("success_epsilon").get_to(s.success_epsilon);
  j.at("groups").get_to(s.groups);
}

std::pair<double, double> WilsonInterval(std::size_t successes, std::size_t n) {
  if (n == 0) return {0.0, 1.0};
  constexpr double z = 1.96;
  const double dn = static_cast<double>(n);
  const double phat = static_cast<double>(successes) / dn;
  const double denom = 1.0 + z * z / dn;
  const double center = (phat + z * z / (2.0 * dn)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / dn + z * z / (4.0 * dn * dn)) / denom;
  // The interval always contains phat; pin the ends exactly at 0 and n.
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == n ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

Summary Summarize(const std::vector<TrialRecord>& records, double success_epsilon) {
  Summary summary;
  summary.success_epsilon = success_epsilon;
  if (!records.empty()) summary.experiment = records.front().experiment;
  std::vector<std::string> order;
  std::map<std::pair<std::string, std::size_t>, GroupSummary> groups;
  for (const auto& r : records) {
    if (std::find(order.begin(), order.end(), r.learner) == order.end()) order.push_back(r.learner);
    GroupSummary& g = groups[{r.learner, r.m}];
    g.learner = r.learner;
    g.m = r.m;
    ++g.trials;
    if (r.status != TrialStatus::kOk) continue;
    ++g.ok;
    g.mean_precision_loss += r.expected.precision_loss;
    g.mean_recall_loss += r.expected.recall_loss;
    g.mean_scalar_loss += r.expected.scalar_loss;
    if (r.expected.precision_loss <= success_epsilon && r.expected.recall_loss <= success_epsilon) {
      ++g.successes;
    }
  }
  for (const auto& learner : order) {
    for (auto& [key, g] : groups) {
      if (key.first != learner) continue;
      if (g.ok > 0) {
        const double ok = static_cast<double>(g.ok);
        g.mean_precision_loss /= ok;
        g.mean_recall_loss /= ok;
        g.mean_scalar_loss /= ok;
      }
      g.success_fraction = static_cast<double>(g.successes) / static_cast<double>(g.trials);
      std::tie(g.ci_low, g.ci_high) = WilsonInterval(g.successes, g.trials);
      summary.groups.push_back(g);
    }
  }
  return summary;
}

std::string FormatCsv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "experiment,learner,m,trial,precision_loss,recall_loss,scalar_loss,chosen_id,seed,status\n";
  for (const auto& r : records) {
    out << CsvField(r.experiment) << ',' << CsvField(r.learner) << ',' << r.m << ',' << r.trial
        << ',' << Real(r.expected.precision_loss) << ',' << Real(r.expected.recall_loss) << ','
        << Real(r.expected.scalar_loss) << ',' << CsvField(r.chosen_id) << ',' << r.seed << ','
        << StatusName(r.status) << '\n';
  }
  return out.str();
}

void WriteCsv(const std::vector<TrialRecord>& records, const std::filesystem::path& path) {
  if (records.empty()) throw InvalidArgument("WriteCsv: no records");
  WriteText(FormatCsv(records), path);
}

void WriteSummary(const Summary& summary, const std::filesystem::path& path) {
  WriteText(json(summary).dump(2) + "\n", path);
}

std::vector<VerifierEntry> DefaultVerifiers() {
  return {
      {"dH_dpr_sandwich",
       [](std::size_t trials, RandomStream& rng) { return VerifyDhDprSandwich(trials, rng); }},
      {"constrained_opt",
       [](std::size_t, RandomStream&) { return VerifyConstrainedOpt(6, {0.0, 0.5, 1.0, 2.0}); }},
      {"prec_recall_inequality",
       [](std::size_t trials, RandomStream& rng) {
         return VerifyPrecRecallInequality(trials, {0.25, 0.5, 1.0}, rng);
       }},
      {"bounded_deg",
       [](std::size_t trials, RandomStream& rng) { return VerifyBoundedDeg(trials, rng); }},
      {"pareto_lb_enumeration", [](std::size_t, RandomStream&) { return EnumerateParetoLb(); }},
      {"scalar_lb_payoffs",
       [](std::size_t, RandomStream& rng) {
         return VerifyScalarLbPayoffs({1.0 / 8.0, 2.0 / 3.0}, 96, 100000, rng);
       }},
  };
}

bool AggregateReport::pass() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass(); });
}

void to_json(json& j, const AggregateReport& r) {
  j = json{{"pass", r.pass()}, {"reports", r.reports}};
}

AggregateReport VerifyAll(std::size_t trials, std::uint64_t seed,
                          const std::vector<VerifierEntry>& verifiers) {
  AggregateReport out;
  for (const auto& v : verifiers) {
    RandomStream rng = RandomStream(seed).Split(v.name);
    VerificationReport report = v.run(trials, rng);
    if (report.name.empty()) report.name = v.name;
    out.reports.push_back(std::move(report));
  }
  return out;
}

}  // namespace pacsets
