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

#ifndef PACSETS_SURROGATE_H_
#define PACSETS_SURROGATE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pacsets/hypothesis.h"
#include "pacsets/label_set.h"
#include "pacsets/learners.h"
#include "pacsets/world.h"

namespace pacsets {

// v(g', g'') for every ordered pair of class members, row-major in class
// order, together with the sample count it was averaged over.
class PairVector {
 public:
  PairVector(std::vector<std::string> ids, std::size_t m);

  std::size_t dim() const { return ids_.size(); }
  std::size_t m() const { return m_; }
  const std::vector<std::string>& ids() const { return ids_; }

  double at(std::size_t a, std::size_t b) const { return entries_[a * ids_.size() + b]; }
  double& at(std::size_t a, std::size_t b) { return entries_[a * ids_.size() + b]; }
  std::span<const double> entries() const { return entries_; }

 private:
  std::vector<std::string> ids_;
  std::size_t m_;
  std::vector<double> entries_;
};

// The observed hypothesis: index i carries the singleton {v_i} at x_i.
// Repeated inputs stay separate indices.
class EmpiricalHypothesis {
 public:
  explicit EmpiricalHypothesis(const TrainingSet& data);

  std::size_t size() const { return sets_.size(); }
  InputId input(std::size_t i) const { return inputs_[i]; }
  const LabelSet& set(std::size_t i) const { return sets_[i]; }
  std::span<const LabelSet> sets() const { return sets_; }
  std::span<const InputId> inputs() const { return inputs_; }

 private:
  std::vector<InputId> inputs_;
  std::vector<LabelSet> sets_;
};

// |g_x n a| / |g_x|; 0 when g_x is empty.
double UniformMass(const LabelSet& g_x, const LabelSet& a);
double UniformMass(const Hypothesis& g, InputId x, const LabelSet& a);

// v_g(g', g'') = (1/m) sum_i U_i^g(g'(x_i) \ g''(x_i)).
PairVector PairVectorFor(const Hypothesis& g, const HypothesisClass& hypotheses,
                         std::span<const InputId> xs);

// Same, for a reference that may differ per index: g_sets[i] plays g(x_i).
PairVector PairVectorForSets(std::span<const LabelSet> g_sets, const HypothesisClass& hypotheses,
                             std::span<const InputId> xs);

// v_hat(g', g'') = (1/m) sum_i 1{v_i in g'(x_i) \ g''(x_i)}.
PairVector PairVectorEmpirical(const TrainingSet& data, const HypothesisClass& hypotheses);

// l_inf distance. Throws InvalidArgument on mismatched ids or m.
double DistanceH(const PairVector& v1, const PairVector& v2);

// (1/m) sum_i [U_i^{g1}(g1 \ g2) + U_i^{g2}(g2 \ g1)].
double DistancePR(const Hypothesis& g1, const Hypothesis& g2, std::span<const InputId> xs);

// First member g_out with
//   (1) v_hat(g, g_out) = 0 for all g, and
//   (2) v_{g_out}(g_out, g) >= epsilon implies v_hat(g_out, g) > 0.
// Throws a retryable LearnerFailure if no member passes.
LearnerOutput SurrogateRealizable(const HypothesisClass& hypotheses, const TrainingSet& data,
                                  double epsilon);

// First member minimizing d_H(v_hat, v_g).
LearnerOutput SurrogateAgnostic(const HypothesisClass& hypotheses, const TrainingSet& data);

}  // namespace pacsets

#endif  // PACSETS_SURROGATE_H_
