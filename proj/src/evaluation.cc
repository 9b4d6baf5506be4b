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

#include "pacsets/evaluation.h"

#include <algorithm>
#include <cmath>

#include "pacsets/errors.h"

namespace pacsets {
namespace {

double GapTerm(const LabelSet& output, const LabelSet& target) {
  if (target.empty()) throw ModelViolation("SeparationGap: empty target set");
  const double nt = static_cast<double>(target.size());
  if (output.empty()) return 1.0 / nt;
  const double hit = static_cast<double>(IntersectionSize(output, target));
  return 1.0 / nt - hit / (static_cast<double>(output.size()) * nt);
}

// Running mean and variance.
struct Moments {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void Add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  double StdError() const {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
  }
};

LossReport FiniteLosses(const Hypothesis& g, const World& world) {
  double precision = 0.0, recall = 0.0;
  const auto xs = world.inputs();
  const auto ps = world.input_probabilities();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const LossReport r = Losses(g(xs[k]), world.Target(xs[k]));
    precision += ps[k] * r.precision_loss;
    recall += ps[k] * r.recall_loss;
  }
  return LossReport::From(precision, recall);
}

}  // namespace

bool HasExactLosses(const World& world, const Hypothesis& g) {
  return !world.fresh_stream() || world.ClosedForm(g.id()).has_value();
}

LossReport OutcomeLosses(const LabelSet& output, const World& world) {
  const auto& outcomes = world.target_outcomes();
  if (!outcomes) throw InvalidArgument("OutcomeLosses: world has no enumerable target law");
  double precision = 0.0, recall = 0.0;
  for (const auto& o : *outcomes) {
    const LossReport r = Losses(output, o.target);
    precision += o.probability * r.precision_loss;
    recall += o.probability * r.recall_loss;
  }
  return LossReport::From(precision, recall);
}

LossEstimate ExpectedLosses(const Hypothesis& g, const World& world, EvalMode mode,
                            std::size_t mc_samples, RandomStream* rng) {
  if (mode != EvalMode::kMonteCarlo && HasExactLosses(world, g)) {
    LossEstimate out;
    out.exact = true;
    if (auto closed = world.ClosedForm(g.id())) {
      out.mean = *closed;
    } else {
      out.mean = FiniteLosses(g, world);
    }
    return out;
  }
  if (mode == EvalMode::kExact) {
    throw InvalidArgument("ExpectedLosses: no exact form for '" + g.id() + "' in world '" +
                          world.kind() + "'");
  }
  if (rng == nullptr) throw InvalidArgument("ExpectedLosses: Monte-Carlo needs a random stream");
  if (mc_samples < 2) throw InvalidArgument("ExpectedLosses: need at least 2 Monte-Carlo samples");
  Moments precision, recall, scalar;
  for (std::size_t s = 0; s < mc_samples; ++s) {
    const InputId x = world.DrawInput(*rng);
    const LossReport r = Losses(g(x), world.Target(x));
    precision.Add(r.precision_loss);
    recall.Add(r.recall_loss);
    scalar.Add(r.scalar_loss);
  }
  LossEstimate out;
  out.mean = {precision.mean, recall.mean, scalar.mean};
  out.std_error = {precision.StdError(), recall.StdError(), scalar.StdError()};
  out.samples = mc_samples;
  return out;
}

std::vector<LossReport> MemberLosses(const HypothesisClass& hypotheses, const World& world) {
  std::vector<LossReport> out;
  out.reserve(hypotheses.size());
  for (const auto& g : hypotheses) {
    out.push_back(ExpectedLosses(g, world, EvalMode::kExact).mean);
  }
  return out;
}

std::vector<FrontierPoint> ParetoFrontier(const HypothesisClass& hypotheses, const World& world) {
  const std::vector<LossReport> losses = MemberLosses(hypotheses, world);
  std::vector<FrontierPoint> points;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    points.push_back({hypotheses[i].id(), losses[i].precision_loss, losses[i].recall_loss});
  }
  return ParetoFrontier(std::span<const FrontierPoint>(points));
}

ClassReference ReferenceFor(const HypothesisClass& hypotheses, const World& world) {
  const std::vector<LossReport> losses = MemberLosses(hypotheses, world);
  ClassReference ref;
  for (std::size_t g = 1; g < losses.size(); ++g) {
    if (losses[g].scalar_loss < losses[ref.best_scalar].scalar_loss) ref.best_scalar = g;
  }
  ref.min_scalar = losses[ref.best_scalar].scalar_loss;
  ref.r = losses[ref.best_scalar].recall_loss;
  ref.p = losses[ref.best_scalar].precision_loss;
  for (const auto& l : losses) {
    if (l.recall_loss <= ref.r) ref.p = std::min(ref.p, l.precision_loss);
  }
  return ref;
}

double SeparationGap(const Hypothesis& g, const World& world) {
  if (world.fresh_stream()) {
    const auto& outcomes = world.target_outcomes();
    if (!outcomes) throw InvalidArgument("SeparationGap: world has no enumerable target law");
    // Fresh-stream members are input-independent; any id stands for all.
    const LabelSet output = g(0);
    double gap = 0.0;
    for (const auto& o : *outcomes) gap += o.probability * GapTerm(output, o.target);
    return gap;
  }
  double gap = 0.0;
  const auto xs = world.inputs();
  const auto ps = world.input_probabilities();
  for (std::size_t k = 0; k < xs.size(); ++k) gap += ps[k] * GapTerm(g(xs[k]), world.Target(xs[k]));
  return gap;
}

}  // namespace pacsets
