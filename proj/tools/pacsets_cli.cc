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

// Command-line front end: run experiments, run verifiers, inspect worlds.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pacsets/errors.h"
#include "pacsets/evaluation.h"
#include "pacsets/harness.h"
#include "pacsets/world.h"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

int Run(const std::string& config_path, const std::string& out_dir,
        std::optional<std::uint64_t> seed) {
  pacsets::ExperimentConfig config = pacsets::LoadConfig(config_path);
  if (seed) config.seed = *seed;
  fs::path dir = !out_dir.empty() ? fs::path(out_dir)
                 : !config.output.empty() ? fs::path(config.output)
                                          : fs::path(".");
  fs::create_directories(dir);
  const auto records = pacsets::RunExperiment(config);
  const fs::path csv = dir / (config.experiment + ".csv");
  const fs::path summary_path = dir / (config.experiment + "_summary.json");
  pacsets::WriteCsv(records, csv);
  const pacsets::Summary summary = pacsets::Summarize(records, config.success_epsilon);
  pacsets::WriteSummary(summary, summary_path);
  for (const auto& g : summary.groups) {
    std::printf("%-22s m=%-7zu ok=%zu/%zu  precision=%.4f recall=%.4f scalar=%.4f  success=%.3f [%.3f, %.3f]\n",
                g.learner.c_str(), g.m, g.ok, g.trials, g.mean_precision_loss,
                g.mean_recall_loss, g.mean_scalar_loss, g.success_fraction, g.ci_low, g.ci_high);
  }
  std::printf("wrote %s and %s\n", csv.string().c_str(), summary_path.string().c_str());
  return 0;
}

int Verify(std::size_t trials, std::uint64_t seed, const std::string& out) {
  const pacsets::AggregateReport report = pacsets::VerifyAll(trials, seed);
  for (const auto& r : report.reports) {
    std::printf("[%s] %-24s instances=%zu violations=%zu\n", r.pass() ? "PASS" : "FAIL",
                r.name.c_str(), r.instances_checked, r.violations.size());
  }
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw pacsets::Error("cannot write '" + out + "'");
    file << json(report).dump(2) << "\n";
  }
  return report.pass() ? 0 : 1;
}

int ListWorlds() {
  for (const auto& info : pacsets::WorldKinds()) {
    std::printf("%-16s %s\n", info.kind.c_str(), info.summary.c_str());
  }
  return 0;
}

// Accepts an experiment config (uses its world) or a bare world spec.
int Frontier(const std::string& path, bool dump) {
  std::ifstream in(path);
  if (!in) throw pacsets::InvalidArgument("cannot read '" + path + "'");
  const json doc = json::parse(in);
  const pacsets::WorldSpec spec =
      doc.contains("kind") ? doc.get<pacsets::WorldSpec>() : doc.at("world").get<pacsets::WorldSpec>();
  const pacsets::WorldPtr world = pacsets::MakeWorld(spec);
  const auto losses = pacsets::MemberLosses(world->hypotheses(), *world);
  const auto frontier = pacsets::ParetoFrontier(world->hypotheses(), *world);
  json out;
  out["world"] = spec;
  json members = json::array();
  for (std::size_t g = 0; g < losses.size(); ++g) {
    members.push_back({{"id", world->hypotheses()[g].id()},
                       {"precision_loss", losses[g].precision_loss},
                       {"recall_loss", losses[g].recall_loss},
                       {"scalar_loss", losses[g].scalar_loss}});
  }
  out["members"] = members;
  json front = json::array();
  for (const auto& p : frontier) front.push_back(p.id);
  out["frontier"] = front;
  if (dump) out["materialized"] = pacsets::DumpWorld(*world);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pacsets: set-valued PAC learning simulations"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "run an experiment config, write CSV + JSON summary");
  run->add_option("--config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "output directory (default: config 'output' or .)");
  run->add_option("--seed", seed, "root seed, overrides the config");

  std::size_t trials = 1000;
  std::uint64_t verify_seed = 1;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "run every lemma/closed-form verifier");
  verify->add_option("--trials", trials, "random instances per randomized verifier");
  verify->add_option("--seed", verify_seed, "root seed");
  verify->add_option("--json", verify_out, "also write the aggregate report here");

  auto* worlds = app.add_subcommand("worlds", "world kinds");
  auto* list = worlds->add_subcommand("list", "list world kinds and parameters");
  worlds->require_subcommand(1);

  std::string frontier_config;
  bool dump = false;
  auto* frontier = app.add_subcommand("frontier", "exact member losses and Pareto frontier of a world");
  frontier->add_option("--config", frontier_config, "experiment config or world spec")->required()->check(CLI::ExistingFile);
  frontier->add_flag("--dump", dump, "include the fully materialized world");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return Run(config_path, out_dir, seed);
    if (*verify) return Verify(trials, verify_seed, verify_out);
    if (*list) return ListWorlds();
    if (*frontier) return Frontier(frontier_config, dump);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
