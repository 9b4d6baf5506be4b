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

#include <algorithm>
#include <cmath>
#include <limits>

#include "pacsets/errors.h"

namespace pacsets {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireData(const TrainingSet& data, const char* who) {
  if (data.empty()) throw InvalidArgument(std::string(who) + ": empty training set");
}

LearnerOutput Start(const char* name, const HypothesisClass& hypotheses,
                    const ClassImage& image, const TrainingSet& data) {
  LearnerOutput out;
  out.learner = name;
  out.mistakes = MistakeCounts(image, data);
  out.objective.assign(hypotheses.size(), 0.0);
  out.plausible.assign(hypotheses.size(), false);
  return out;
}

void Choose(LearnerOutput& out, const HypothesisClass& hypotheses, std::size_t index) {
  out.chosen = index;
  out.chosen_id = hypotheses[index].id();
}

}  // namespace

std::vector<std::size_t> MistakeCounts(const ClassImage& image, const TrainingSet& data) {
  std::vector<std::size_t> mistakes(image.num_members(), 0);
  for (std::size_t g = 0; g < image.num_members(); ++g) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (!image.at_sample(g, i).contains(data[i].v)) ++mistakes[g];
    }
  }
  return mistakes;
}

LearnerOutput ErmConsistent(const HypothesisClass& hypotheses, const TrainingSet& data) {
  RequireData(data, "erm_consistent");
  const auto xs = data.inputs();
  const ClassImage image(hypotheses, xs);
  LearnerOutput out = Start("erm_consistent", hypotheses, image, data);
  std::optional<std::size_t> first;
  for (std::size_t g = 0; g < hypotheses.size(); ++g) {
    out.objective[g] = static_cast<double>(out.mistakes[g]);
    out.plausible[g] = out.mistakes[g] == 0;
    if (out.plausible[g] && !first) first = g;
  }
  if (!first) throw LearnerFailure("erm_consistent: no member is consistent with the data", false);
  Choose(out, hypotheses, *first);
  return out;
}

LearnerOutput MlRealizable(const HypothesisClass& hypotheses, const TrainingSet& data) {
  RequireData(data, "ml_realizable");
  const auto xs = data.inputs();
  const ClassImage image(hypotheses, xs);
  LearnerOutput out = Start("ml_realizable", hypotheses, image, data);
  std::optional<std::size_t> best;
  for (std::size_t g = 0; g < hypotheses.size(); ++g) {
    out.plausible[g] = out.mistakes[g] == 0;
    if (!out.plausible[g]) {
      out.objective[g] = kInf;
      continue;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      sum += std::log2(static_cast<double>(image.at_sample(g, i).size()));
    }
    out.objective[g] = sum;
    if (!best || sum < out.objective[*best]) best = g;
  }
  if (!best) {
    throw LearnerFailure("ml_realizable: no consistent member (data is not realizable)", false);
  }
  Choose(out, hypotheses, *best);
  return out;
}

double DefaultSlack(std::size_t class_size, std::size_t m, double delta) {
  if (m == 0 || !(delta > 0.0)) throw InvalidArgument("DefaultSlack: need m >= 1, delta > 0");
  const double log_term = std::log2(static_cast<double>(class_size) / delta);
  return 2.0 * std::sqrt(std::max(log_term, 0.0) / static_cast<double>(m));
}

double TruncatedLogObjective(const ClassImage& image, std::size_t g_prime, std::size_t g) {
  const std::size_t distinct = image.num_distinct();
  std::vector<double> term(distinct);
  for (std::size_t d = 0; d < distinct; ++d) {
    const auto a = image.at_distinct(g_prime, d).size();
    const auto b = image.at_distinct(g, d).size();
    if (a == 0 && b == 0) {
      term[d] = 0.0;
    } else if (a == 0) {
      term[d] = -2.0;
    } else if (b == 0) {
      term[d] = 2.0;
    } else {
      const double diff = std::log2(static_cast<double>(a)) - std::log2(static_cast<double>(b));
      term[d] = std::clamp(diff, -2.0, 2.0);
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < image.num_samples(); ++i) sum += term[image.distinct_of(i)];
  return sum / static_cast<double>(image.num_samples());
}

LearnerOutput ModifiedMl(const HypothesisClass& hypotheses, const TrainingSet& data,
                         const ModifiedMlParams& params) {
  RequireData(data, "modified_ml");
  const double slack = params.slack ? *params.slack
                                    : DefaultSlack(hypotheses.size(), data.size(), params.delta);
  if (!(slack >= 0.0)) throw InvalidArgument("modified_ml: slack must be >= 0");
  const auto xs = data.inputs();
  const ClassImage image(hypotheses, xs);
  LearnerOutput out = Start("modified_ml", hypotheses, image, data);
  const double threshold = static_cast<double>(data.size()) * (params.r + slack);
  std::vector<std::size_t> plausible;
  for (std::size_t g = 0; g < hypotheses.size(); ++g) {
    out.plausible[g] = static_cast<double>(out.mistakes[g]) <= threshold;
    out.objective[g] = kInf;
    if (out.plausible[g]) plausible.push_back(g);
  }
  if (plausible.empty()) {
    throw LearnerFailure("modified_ml: no member within the mistake budget; r is too small", false);
  }
  std::optional<std::size_t> best;
  for (std::size_t gp : plausible) {
    double worst = 0.0;  // the g = g' term
    for (std::size_t g : plausible) {
      if (g != gp) worst = std::max(worst, TruncatedLogObjective(image, gp, g));
    }
    out.objective[gp] = worst;
    if (!best || worst < out.objective[*best]) best = gp;
  }
  Choose(out, hypotheses, *best);
  out.minimax_value = out.objective[*best];
  return out;
}

LearnerOutput SemiRealizable(const HypothesisClass& hypotheses, const TrainingSet& data,
                             double tol) {
  RequireData(data, "semi_realizable");
  if (!(tol >= 0.0)) throw InvalidArgument("semi_realizable: tol must be >= 0");
  const auto xs = data.inputs();
  const ClassImage image(hypotheses, xs);
  LearnerOutput out = Start("semi_realizable", hypotheses, image, data);
  const double m = static_cast<double>(data.size());
  double best_score = -kInf;
  for (std::size_t g = 0; g < hypotheses.size(); ++g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const LabelSet& set = image.at_sample(g, i);
      if (set.contains(data[i].v)) sum += 1.0 / static_cast<double>(set.size());
    }
    out.objective[g] = sum / m;
    best_score = std::max(best_score, out.objective[g]);
  }
  std::optional<std::size_t> best;
  for (std::size_t g = 0; g < hypotheses.size(); ++g) {
    out.plausible[g] = out.objective[g] >= best_score - tol;
    if (out.plausible[g] && (!best || out.mistakes[g] < out.mistakes[*best])) best = g;
  }
  Choose(out, hypotheses, *best);
  return out;
}

}  // namespace pacsets
