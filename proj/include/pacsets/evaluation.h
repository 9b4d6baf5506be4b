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

#ifndef PACSETS_EVALUATION_H_
#define PACSETS_EVALUATION_H_

#include <cstddef>
#include <vector>

#include "pacsets/hypothesis.h"
#include "pacsets/losses.h"
#include "pacsets/random.h"
#include "pacsets/world.h"

namespace pacsets {

enum class EvalMode {
  kExact,       // closed form or enumeration; throws if neither exists
  kMonteCarlo,  // sample means over fresh draws from the input model
  kAuto,        // exact when available, else Monte-Carlo
};

struct LossEstimate {
  LossReport mean;
  // Standard errors of the three means; zero for exact evaluation.
  LossReport std_error;
  std::size_t samples = 0;  // 0 for exact evaluation
  bool exact = false;
};

// Exact when the world is finite (enumeration over its inputs) or carries a
// closed form for g's id.
bool HasExactLosses(const World& world, const Hypothesis& g);

LossEstimate ExpectedLosses(const Hypothesis& g, const World& world, EvalMode mode,
                            std::size_t mc_samples = 100000, RandomStream* rng = nullptr);

// Expected losses of a fixed output set against the enumerated per-input
// target law of a fresh-stream world. Members of the built-in fresh-stream
// worlds output the same set at every input, so this is their exact loss.
// Throws InvalidArgument if the world has no enumerable target law.
LossReport OutcomeLosses(const LabelSet& output, const World& world);

// Exact expected losses of every member, in class order.
std::vector<LossReport> MemberLosses(const HypothesisClass& hypotheses, const World& world);

// Non-dominated members under exact expected losses.
std::vector<FrontierPoint> ParetoFrontier(const HypothesisClass& hypotheses, const World& world);

// Reference losses of a class in a world, from exact member losses.
struct ClassReference {
  std::size_t best_scalar = 0;  // first member of minimal scalar loss
  double min_scalar = 0.0;
  // r: recall loss of the best-scalar member; p: smallest precision loss
  // among members with recall loss <= r.
  double r = 0.0;
  double p = 0.0;
};
ClassReference ReferenceFor(const HypothesisClass& hypotheses, const World& world);

// E[1/n_target(x)] - E[|g(x) n target(x)| / (n_g(x) n_target(x))], exact.
// Zero-precision members score 0; the smallest score over the others is
// the gap that governs semi-realizable sample sizes.
double SeparationGap(const Hypothesis& g, const World& world);

}  // namespace pacsets

#endif  // PACSETS_EVALUATION_H_
