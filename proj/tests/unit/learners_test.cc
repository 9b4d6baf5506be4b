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

#include "pacsets/learners.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "pacsets/errors.h"
#include "pacsets/evaluation.h"
#include "test_util.h"

namespace pacsets {
namespace {

using testing::Relabel;
using testing::SampleFromTarget;

constexpr std::uint64_t kUniverse = 32;  // InstanceLimits default bound

TrainingSet Constant(InputId first, std::initializer_list<LabelId> labels) {
  std::vector<Sample> s;
  InputId x = first;
  for (LabelId v : labels) s.push_back({x++, v});
  return TrainingSet(std::move(s));
}

TEST(ErmConsistentTest, PicksCompleteFunctionWhenFirst) {
  const WorldPtr w = Example1World(10, 0, {"complete", "target", "g1", "g2", "empty"});
  const TrainingSet data = Constant(0, {0, 3, 9, 4});
  const LearnerOutput out = ErmConsistent(w->hypotheses(), data);
  EXPECT_EQ(out.chosen_id, "complete");
  EXPECT_EQ(out.mistakes, (std::vector<std::size_t>{0, 0, 3, 4, 4}));
}

TEST(MlRealizableTest, PrefersSmallestConsistentMember) {
  const WorldPtr w = Example1World(10, 0, {"complete", "target", "g1", "g2", "empty"});
  const TrainingSet data = Constant(0, {0, 3, 9, 4});
  const LearnerOutput out = MlRealizable(w->hypotheses(), data);
  EXPECT_EQ(out.chosen_id, "target");
  EXPECT_NEAR(out.objective[1], 4 * std::log2(10.0), 1e-12);
  EXPECT_NEAR(out.objective[0], 4 * std::log2(1000.0), 1e-12);
  EXPECT_TRUE(std::isinf(out.objective[2]));
  // Only u_n observed: g1 is consistent and smaller.
  EXPECT_EQ(MlRealizable(w->hypotheses(), Constant(0, {9, 9})).chosen_id, "g1");
}

TEST(MlRealizableTest, NoConsistentMemberFails) {
  const WorldPtr w = Example1World(10, 0, {"g1", "g2"});
  try {
    MlRealizable(w->hypotheses(), Constant(0, {0}));
    FAIL() << "expected LearnerFailure";
  } catch (const LearnerFailure& e) {
    EXPECT_FALSE(e.retryable());
  }
  EXPECT_THROW(MlRealizable(w->hypotheses(), TrainingSet()), InvalidArgument);
}

// Random instances: the output is consistent and of minimal log-size, or
// no member is consistent.
TEST(MlRealizableTest, ConsistencyProperty) {
  RandomStream root(101);
  for (int trial = 0; trial < 300; ++trial) {
    RandomStream rng = root.Split(static_cast<std::uint64_t>(trial));
    const RandomInstance inst = MakeRandomInstance(rng);
    const TrainingSet data = SampleFromTarget(inst, rng);
    std::optional<std::size_t> best;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t g = 0; g < inst.hypotheses.size(); ++g) {
      bool consistent = true;
      double value = 0.0;
      for (const Sample& s : data.samples()) {
        const LabelSet set = inst.hypotheses[g](s.x);
        if (!set.contains(s.v)) consistent = false;
        else value += std::log2(static_cast<double>(set.size()));
      }
      if (consistent && value < best_value - 1e-12) {
        best = g;
        best_value = value;
      }
    }
    if (!best) {
      EXPECT_THROW(MlRealizable(inst.hypotheses, data), LearnerFailure);
      continue;
    }
    const LearnerOutput out = MlRealizable(inst.hypotheses, data);
    EXPECT_EQ(out.mistakes[out.chosen], 0u);
    EXPECT_NEAR(out.objective[out.chosen], best_value, 1e-9) << "trial " << trial;
  }
}

TEST(ModifiedMlTest, DefaultSlackFormula) {
  EXPECT_NEAR(DefaultSlack(8, 100, 0.1), 2.0 * std::sqrt(std::log2(80.0) / 100.0), 1e-15);
}

double DirectTerm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) return 0.0;
  if (a == 0) return -2.0;
  if (b == 0) return 2.0;
  const double da = static_cast<double>(a), db = static_cast<double>(b);
  return std::log2(std::min(da, 4 * db) / std::min(db, 4 * da));
}

TEST(ModifiedMlTest, TruncatedObjectiveMatchesDirectFormula) {
  RandomStream root(7);
  for (int trial = 0; trial < 200; ++trial) {
    RandomStream rng = root.Split(static_cast<std::uint64_t>(trial));
    const RandomInstance inst = MakeRandomInstance(rng);
    const ClassImage image(inst.hypotheses, inst.xs);
    for (std::size_t gp = 0; gp < inst.hypotheses.size(); ++gp) {
      for (std::size_t g = 0; g < inst.hypotheses.size(); ++g) {
        double sum = 0.0;
        for (InputId x : inst.xs) sum += DirectTerm(inst.hypotheses[gp](x).size(), inst.hypotheses[g](x).size());
        const double want = sum / static_cast<double>(inst.xs.size());
        const double got = TruncatedLogObjective(image, gp, g);
        ASSERT_NEAR(got, want, 1e-12);
        ASSERT_LE(std::abs(got), 2.0 + 1e-12);
      }
    }
  }
}

// Brute force: plausible set by mistake budget, then the first member of
// minimal worst-case truncated objective over the plausible set.
TEST(ModifiedMlTest, MinimaxProperty) {
  RandomStream root(8);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    RandomStream rng = root.Split(static_cast<std::uint64_t>(trial));
    const RandomInstance inst = MakeRandomInstance(rng);
    const TrainingSet data = SampleFromTarget(inst, rng);
    ModifiedMlParams params;
    params.r = rng.Uniform01() * 0.5;
    params.slack = rng.Uniform01() * 0.3;
    const double m = static_cast<double>(data.size());
    std::vector<std::size_t> plausible;
    for (std::size_t g = 0; g < inst.hypotheses.size(); ++g) {
      std::size_t mistakes = 0;
      for (const Sample& s : data.samples()) mistakes += !inst.hypotheses[g](s.x).contains(s.v);
      if (static_cast<double>(mistakes) <= m * (params.r + *params.slack)) plausible.push_back(g);
    }
    if (plausible.empty()) {
      EXPECT_THROW(ModifiedMl(inst.hypotheses, data, params), LearnerFailure);
      continue;
    }
    auto objective = [&](std::size_t gp, std::size_t g) {
      double sum = 0.0;
      for (InputId x : inst.xs) sum += DirectTerm(inst.hypotheses[gp](x).size(), inst.hypotheses[g](x).size());
      return sum / m;
    };
    std::vector<double> worst;
    for (std::size_t gp : plausible) {
      double w = -std::numeric_limits<double>::infinity();
      for (std::size_t g : plausible) w = std::max(w, objective(gp, g));
      worst.push_back(w);
    }
    const double best = *std::min_element(worst.begin(), worst.end());
    const LearnerOutput out = ModifiedMl(inst.hypotheses, data, params);
    ASSERT_TRUE(out.minimax_value.has_value());
    EXPECT_NEAR(*out.minimax_value, best, 1e-9);
    const auto pos = std::find(plausible.begin(), plausible.end(), out.chosen);
    ASSERT_NE(pos, plausible.end()) << "output outside the plausible set";
    EXPECT_NEAR(worst[static_cast<std::size_t>(pos - plausible.begin())], best, 1e-9);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(SemiRealizableTest, ScoreAndTieBreaking) {
  // Labels 0 and 1 seen at one input each; a = {0}, b = {0, 1}, c = {5}.
  HypothesisClass h({Hypothesis::Constant("a", LabelSet::Of({0})),
                     Hypothesis::Constant("b", LabelSet::Of({0, 1})),
                     Hypothesis::Constant("c", LabelSet::Of({5}))});
  const TrainingSet data = Constant(0, {0, 1});
  LearnerOutput out = SemiRealizable(h, data, 0.0);
  EXPECT_DOUBLE_EQ(out.objective[0], 0.5);
  EXPECT_DOUBLE_EQ(out.objective[1], 0.5);
  EXPECT_DOUBLE_EQ(out.objective[2], 0.0);
  // Tie in S: fewer mistakes wins.
  EXPECT_EQ(out.chosen_id, "b");
  EXPECT_THROW(SemiRealizable(h, data, -1.0), InvalidArgument);
}

TEST(SemiRealizableTest, RecoversZeroPrecisionMember) {
  BoundedTargetParams p;
  p.min_gap = 0.1;
  const WorldPtr w = BoundedTargetWorld(p, 3);
  RandomStream rng(4);
  const TrainingSet data = SampleTrainingSet(*w, 5000, rng);
  const LearnerOutput out = SemiRealizable(w->hypotheses(), data, 0.0);
  EXPECT_DOUBLE_EQ(ExpectedLosses(w->hypotheses()[out.chosen], *w, EvalMode::kExact).mean.precision_loss,
                   0.0);
}

// Chosen index, or nullopt when the learner declines.
std::optional<std::size_t> ChosenOrNone(const std::function<LearnerOutput()>& run) {
  try {
    return run().chosen;
  } catch (const LearnerFailure&) {
    return std::nullopt;
  }
}

// Relabeling every set and label by one bijection changes nothing.
TEST(LearnersTest, LabelPermutationInvariance) {
  RandomStream root(9);
  for (int trial = 0; trial < 200; ++trial) {
    RandomStream rng = root.Split(static_cast<std::uint64_t>(trial));
    const RandomInstance inst = MakeRandomInstance(rng);
    const TrainingSet data = SampleFromTarget(inst, rng);
    const auto perm = testing::RandomPermutation(rng, kUniverse);
    const HypothesisClass h2 = Relabel(inst.hypotheses, inst.xs, perm);
    const TrainingSet d2 = Relabel(data, perm);
    const ClassImage i1(inst.hypotheses, data.inputs()), i2(h2, d2.inputs());
    EXPECT_EQ(MistakeCounts(i2, d2), MistakeCounts(i1, data));
    EXPECT_EQ(SemiRealizable(h2, d2, 0.0).chosen, SemiRealizable(inst.hypotheses, data, 0.0).chosen);
    ModifiedMlParams params;
    params.r = 0.5;
    EXPECT_EQ(ChosenOrNone([&] { return ModifiedMl(h2, d2, params); }),
              ChosenOrNone([&] { return ModifiedMl(inst.hypotheses, data, params); }));
    EXPECT_EQ(ChosenOrNone([&] { return MlRealizable(h2, d2); }),
              ChosenOrNone([&] { return MlRealizable(inst.hypotheses, data); }));
    EXPECT_EQ(ChosenOrNone([&] { return ErmConsistent(h2, d2); }),
              ChosenOrNone([&] { return ErmConsistent(inst.hypotheses, data); }));
  }
}

TEST(LearnersTest, SampleOrderInvariance) {
  RandomStream root(10);
  for (int trial = 0; trial < 200; ++trial) {
    RandomStream rng = root.Split(static_cast<std::uint64_t>(trial));
    const RandomInstance inst = MakeRandomInstance(rng);
    const TrainingSet data = SampleFromTarget(inst, rng);
    const TrainingSet shuffled = testing::Shuffled(data, rng);
    EXPECT_EQ(SemiRealizable(inst.hypotheses, shuffled, 0.0).chosen,
              SemiRealizable(inst.hypotheses, data, 0.0).chosen);
    ModifiedMlParams params;
    params.r = 0.5;
    EXPECT_EQ(ChosenOrNone([&] { return ModifiedMl(inst.hypotheses, shuffled, params); }),
              ChosenOrNone([&] { return ModifiedMl(inst.hypotheses, data, params); }));
  }
}

}  // namespace
}  // namespace pacsets
