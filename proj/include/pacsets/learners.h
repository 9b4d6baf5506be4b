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

#ifndef PACSETS_LEARNERS_H_
#define PACSETS_LEARNERS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pacsets/hypothesis.h"
#include "pacsets/world.h"

namespace pacsets {

// What a learner picked, plus per-member diagnostics in class order.
//
// The meaning of `objective` depends on the learner:
//   erm_consistent        mistake count
//   ml_realizable         sum_i log2 n_g(x_i); +inf if inconsistent
//   modified_ml           max over the plausible set of the truncated
//                         log-size objective; +inf outside the plausible set
//   semi_realizable       S(g) = (1/m) sum_i 1{v_i in g(x_i)} / n_g(x_i)
//   surrogate_realizable  largest unobserved own-mass v_g(g, g'') over g''
//                         with empirical mass 0 (condition (2) fails iff >= eps)
//   surrogate_agnostic    d_H(v_hat, v_g)
// `plausible` is consistency for the first two, membership in the plausible
// set for modified_ml, the tolerance band for semi_realizable and condition
// (1) for surrogate_realizable.
struct LearnerOutput {
  std::string learner;
  std::size_t chosen = 0;
  std::string chosen_id;
  std::vector<std::size_t> mistakes;  // |I_g|
  std::vector<double> objective;
  std::vector<bool> plausible;
  std::optional<double> minimax_value;  // modified_ml only
};

// Mistake count |I_g| = #{i : v_i not in g(x_i)} for every member.
std::vector<std::size_t> MistakeCounts(const ClassImage& image, const TrainingSet& data);

// First member (class order) with zero mistakes. Naive baseline: the
// complete function is consistent with everything.
LearnerOutput ErmConsistent(const HypothesisClass& hypotheses, const TrainingSet& data);

// Among consistent members, minimize sum_i log2 n_g(x_i).
// Throws LearnerFailure if no member is consistent.
LearnerOutput MlRealizable(const HypothesisClass& hypotheses, const TrainingSet& data);

struct ModifiedMlParams {
  double r = 0.0;  // target recall loss
  double delta = 0.1;
  // Unset: 2 sqrt(log2(|H| / delta) / m).
  std::optional<double> slack;
};

// Default slack for |H| members, m samples and confidence delta.
double DefaultSlack(std::size_t class_size, std::size_t m, double delta);

// (1/m) sum_i log2[(a ^ 4b) / (b ^ 4a)] with a = n_{g'}(x_i), b = n_g(x_i),
// ^ = min. Equivalently each term is log2 a - log2 b clamped to [-2, 2]; an
// empty side clamps to the bound and two empty sides contribute 0.
double TruncatedLogObjective(const ClassImage& image, std::size_t g_prime, std::size_t g);

// Plausible set H_hat = {g : |I_g| <= m (r + slack)}; returns the member of
// H_hat minimizing the max over H_hat of TruncatedLogObjective.
// Throws LearnerFailure if H_hat is empty.
LearnerOutput ModifiedMl(const HypothesisClass& hypotheses, const TrainingSet& data,
                         const ModifiedMlParams& params);

// Maximizes S(g); among members with S(g) >= max S - tol returns the one
// with the fewest mistakes.
LearnerOutput SemiRealizable(const HypothesisClass& hypotheses, const TrainingSet& data,
                             double tol);

}  // namespace pacsets

#endif  // PACSETS_LEARNERS_H_
