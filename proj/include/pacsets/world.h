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

#ifndef PACSETS_WORLD_H_
#define PACSETS_WORLD_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pacsets/hypothesis.h"
#include "pacsets/label_set.h"
#include "pacsets/losses.h"
#include "pacsets/random.h"

namespace pacsets {

struct Sample {
  InputId x;
  LabelId v;

  friend bool operator==(const Sample&, const Sample&) = default;
};

// (x_i, v_i), i = 1..m, in draw order.
class TrainingSet {
 public:
  TrainingSet() = default;
  explicit TrainingSet(std::vector<Sample> samples) : samples_(std::move(samples)) {}

  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }
  std::span<const Sample> samples() const { return samples_; }
  std::vector<InputId> inputs() const;

  friend bool operator==(const TrainingSet&, const TrainingSet&) = default;

 private:
  std::vector<Sample> samples_;
};

// Serializable recipe for a world: kind + parameters + seed.
struct WorldSpec {
  std::string kind;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
};
void to_json(nlohmann::json& j, const WorldSpec& spec);
void from_json(const nlohmann::json& j, WorldSpec& spec);

// One possible target set at an input, with its probability.
struct TargetOutcome {
  double probability;
  LabelSet target;
};

// A data-generating environment: input distribution, target rule, class.
//
// Two input models exist. Finite worlds draw from a categorical
// distribution over explicit input ids. Fresh-stream worlds stand in for an
// infinite uniform input space: every draw mints a new id, so no input is
// ever seen twice.
//
// Targets may be randomized per input. The realization at x is a pure
// function of (world seed, x), so it is fixed the first time it is looked
// at and every later query (training or evaluation, any thread) sees the
// same set.
class World {
 public:
  struct FiniteInputs {
    std::vector<InputId> ids;
    std::vector<double> probabilities;
  };

  // Fresh-stream world.
  World(WorldSpec spec, HypothesisClass hypotheses, Hypothesis target,
        std::map<std::string, LossReport> closed_forms,
        std::optional<std::vector<TargetOutcome>> outcomes);
  // Finite world. Every target set must be non-empty.
  World(WorldSpec spec, HypothesisClass hypotheses, Hypothesis target, FiniteInputs inputs);

  const WorldSpec& spec() const { return spec_; }
  const std::string& kind() const { return spec_.kind; }
  const HypothesisClass& hypotheses() const { return hypotheses_; }
  const Hypothesis& target_hypothesis() const { return target_; }
  LabelSet Target(InputId x) const;

  bool fresh_stream() const { return !finite_.has_value(); }
  // Empty for fresh-stream worlds.
  std::span<const InputId> inputs() const;
  std::span<const double> input_probabilities() const;

  InputId DrawInput(RandomStream& rng) const;

  // Exact expected losses by hypothesis id, where the construction has them.
  std::optional<LossReport> ClosedForm(const std::string& id) const;
  const std::map<std::string, LossReport>& closed_forms() const { return closed_forms_; }
  // For fresh-stream worlds whose per-input target law is enumerable.
  const std::optional<std::vector<TargetOutcome>>& target_outcomes() const { return outcomes_; }

 private:
  WorldSpec spec_;
  HypothesisClass hypotheses_;
  Hypothesis target_;
  std::optional<FiniteInputs> finite_;
  std::vector<double> cumulative_;
  std::map<std::string, LossReport> closed_forms_;
  std::optional<std::vector<TargetOutcome>> outcomes_;
};

using WorldPtr = std::shared_ptr<const World>;

// x_i from the input model, v_i uniform over the target set at x_i.
TrainingSet SampleTrainingSet(const World& world, std::size_t m, RandomStream& rng);

// Uniform k-subset of [lo, lo + universe).
LabelSet RandomLabelSubset(RandomStream& rng, LabelId lo, std::uint64_t universe, std::uint64_t k);

enum class WorldVariant { kI, kII };

// Every input has target {u_1..u_n} = labels 0..n-1. Available members:
// g1 = {u_n}, g2 = {u'} with u' = n outside the target, complete = the
// whole label universe [0, label_universe), empty, target. `members` picks
// them and their class order; empty means {g1, g2, complete, empty}.
// label_universe = 0 picks 100 n.
WorldPtr Example1World(std::uint64_t n, std::uint64_t label_universe = 0,
                       const std::vector<std::string>& members = {});

// Items 0..n-1 per input; N1 = first half, N2 = second half.
// g1 = N1, g2 = N1 u N2. The target draws 3 beta n / 4 items from N1 and
// beta n / 4 from N2, uniformly. Requires beta in [1/8, 2/3] and beta n / 4
// integral.
WorldPtr ScalarLbWorld(double beta, std::uint64_t n, std::uint64_t seed);

// Twelve items per input; g1 = items 0..7, g2 = items 4..11.
// World I: target = g1 w.p. 1/2, else {u1, u2} with u1 ~ 4..7, u2 ~ 8..11.
// World II: target = g2 w.p. 1/2, else {u1, u2} with u1 ~ 4..7, u2 ~ 0..3.
WorldPtr ParetoLbWorld(WorldVariant which, std::uint64_t seed);

// Items 0..n-1 with v1 = 0, v2 = 1; g1 = {v1}, g2 = {v2}.
// World I: target = N \ {v2} w.p. 1/2, else {v1, v2}. World II swaps v1, v2.
WorldPtr SemiLbWorld(WorldVariant which, std::uint64_t n, std::uint64_t seed);

struct RandomWorldParams {
  std::size_t num_inputs = 50;
  std::uint64_t label_universe = 20;
  std::size_t class_size = 8;
  std::uint64_t max_set_size = 5;
  bool realizable = true;
  // Agnostic only: fraction of inputs whose target set is redrawn
  // independently of the base member. 1 means a fully independent target.
  double noise = 1.0;
  // Extra members derived from the target: at each input the target set
  // loses a random part with probability q_drop and gains a random set with
  // probability q_add, both drawn per member uniformly from [0, 0.6]. They
  // give the class a non-trivial precision/recall trade-off.
  std::size_t related_members = 0;
};
void to_json(nlohmann::json& j, const RandomWorldParams& p);
void from_json(const nlohmann::json& j, RandomWorldParams& p);

// Finite world with input ids 0..num_inputs-1 and Dirichlet(1) input
// weights. Each member's set at each input has size uniform in
// [1, max_set_size] and is uniform among subsets of that size of
// [0, label_universe). Realizable: the target is a uniformly chosen member.
// Agnostic: the target copies a uniformly chosen base member and redraws
// each input's set with probability `noise`. Related members come last,
// with ids continuing after the random ones.
WorldPtr RandomFiniteWorld(const RandomWorldParams& params, std::uint64_t seed);

struct BoundedTargetParams {
  std::size_t num_inputs = 40;
  std::uint64_t label_universe = 16;
  std::size_t class_size = 8;
  std::uint64_t target_max = 4;  // C
  double min_gap = 0.05;          // separation gap of every other member
  double max_gap = 1.0;           // lies in [min_gap, max_gap]
};
void to_json(nlohmann::json& j, const BoundedTargetParams& p);
void from_json(const nlohmann::json& j, BoundedTargetParams& p);

// Finite world with target sets of size at most C and exactly one member of
// zero precision loss (a non-empty subset of the target at every input),
// placed at a random class position. Every other member has its own
// corruption rate q ~ U[0, 1): per input it outputs a random set of size
// [1, C] with probability q, else a random non-empty subset of the target.
// Members are redrawn until their separation gap lies in
// [min_gap, max_gap].
WorldPtr BoundedTargetWorld(const BoundedTargetParams& params, std::uint64_t seed);

struct WorldKindInfo {
  std::string kind;
  std::string summary;
};
std::vector<WorldKindInfo> WorldKinds();

WorldPtr MakeWorld(const WorldSpec& spec);

// Full materialization: spec, class tables (finite worlds), input weights,
// target table, closed forms. Equal seeds give byte-identical dumps.
nlohmann::json DumpWorld(const World& world);

}  // namespace pacsets

#endif  // PACSETS_WORLD_H_
