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

#include "pacsets/surrogate.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "pacsets/errors.h"

namespace pacsets {
namespace {

std::vector<std::string> MemberIds(const HypothesisClass& hypotheses) {
  std::vector<std::string> ids;
  for (const auto& h : hypotheses) ids.push_back(h.id());
  return ids;
}

// Adds weight * U^{g_x}(A_a \ A_b) to every off-diagonal entry, using
// |g n (A_a \ A_b)| = |g n A_a| - |g n A_a n A_b|.
void AccumulateAt(const LabelSet& g_x, const ClassImage& image, std::size_t d, double weight,
                  PairVector& out) {
  if (g_x.empty()) return;
  const double scale = weight / static_cast<double>(g_x.size());
  const std::size_t k = image.num_members();
  for (std::size_t a = 0; a < k; ++a) {
    const LabelSet inter = Intersection(g_x, image.at_distinct(a, d));
    if (inter.empty()) continue;
    const auto na = inter.size();
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const auto both = IntersectionSize(inter, image.at_distinct(b, d));
      if (both < na) out.at(a, b) += scale * static_cast<double>(na - both);
    }
  }
}

// v_g(g, g'') for every g'': the own mass of member g outside g''.
std::vector<double> OwnRow(const ClassImage& image, std::size_t g) {
  const std::size_t k = image.num_members();
  std::vector<double> row(k, 0.0);
  const double m = static_cast<double>(image.num_samples());
  for (std::size_t d = 0; d < image.num_distinct(); ++d) {
    const LabelSet& own = image.at_distinct(g, d);
    if (own.empty()) continue;
    const double scale = static_cast<double>(image.multiplicity(d)) /
                         (m * static_cast<double>(own.size()));
    for (std::size_t b = 0; b < k; ++b) {
      if (b == g) continue;
      row[b] += scale * static_cast<double>(DifferenceSize(own, image.at_distinct(b, d)));
    }
  }
  return row;
}

void Choose(LearnerOutput& out, const HypothesisClass& hypotheses, std::size_t index) {
  out.chosen = index;
  out.chosen_id = hypotheses[index].id();
}

}  // namespace

PairVector::PairVector(std::vector<std::string> ids, std::size_t m)
    : ids_(std::move(ids)), m_(m), entries_(ids_.size() * ids_.size(), 0.0) {}

EmpiricalHypothesis::EmpiricalHypothesis(const TrainingSet& data) {
  inputs_.reserve(data.size());
  sets_.reserve(data.size());
  for (const auto& s : data.samples()) {
    inputs_.push_back(s.x);
    sets_.push_back(LabelSet::Of({s.v}));
  }
}

double UniformMass(const LabelSet& g_x, const LabelSet& a) {
  if (g_x.empty()) return 0.0;
  return static_cast<double>(IntersectionSize(g_x, a)) / static_cast<double>(g_x.size());
}

double UniformMass(const Hypothesis& g, InputId x, const LabelSet& a) {
  return UniformMass(g(x), a);
}

PairVector PairVectorFor(const Hypothesis& g, const HypothesisClass& hypotheses,
                         std::span<const InputId> xs) {
  if (xs.empty()) throw InvalidArgument("PairVectorFor: empty input list");
  const ClassImage image(hypotheses, xs);
  PairVector out(MemberIds(hypotheses), xs.size());
  const double m = static_cast<double>(xs.size());
  for (std::size_t d = 0; d < image.num_distinct(); ++d) {
    AccumulateAt(g(image.distinct_input(d)), image, d,
                 static_cast<double>(image.multiplicity(d)) / m, out);
  }
  return out;
}

PairVector PairVectorForSets(std::span<const LabelSet> g_sets, const HypothesisClass& hypotheses,
                             std::span<const InputId> xs) {
  if (xs.empty()) throw InvalidArgument("PairVectorForSets: empty input list");
  if (g_sets.size() != xs.size()) {
    throw InvalidArgument("PairVectorForSets: one reference set per input is required");
  }
  const ClassImage image(hypotheses, xs);
  PairVector out(MemberIds(hypotheses), xs.size());
  const double w = 1.0 / static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    AccumulateAt(g_sets[i], image, image.distinct_of(i), w, out);
  }
  return out;
}

PairVector PairVectorEmpirical(const TrainingSet& data, const HypothesisClass& hypotheses) {
  if (data.empty()) throw InvalidArgument("PairVectorEmpirical: empty training set");
  const auto xs = data.inputs();
  const ClassImage image(hypotheses, xs);
  // Indices sharing (x, v) contribute identically; count them once.
  std::map<std::pair<std::size_t, LabelId>, std::size_t> groups;
  for (std::size_t i = 0; i < data.size(); ++i) ++groups[{image.distinct_of(i), data[i].v}];
  const std::size_t k = hypotheses.size();
  const double m = static_cast<double>(data.size());
  PairVector out(MemberIds(hypotheses), data.size());
  std::vector<char> in(k);
  for (const auto& [key, count] : groups) {
    const auto [d, v] = key;
    for (std::size_t a = 0; a < k; ++a) in[a] = image.at_distinct(a, d).contains(v);
    const double w = static_cast<double>(count) / m;
    for (std::size_t a = 0; a < k; ++a) {
      if (!in[a]) continue;
      for (std::size_t b = 0; b < k; ++b) {
        if (!in[b]) out.at(a, b) += w;
      }
    }
  }
  return out;
}

double DistanceH(const PairVector& v1, const PairVector& v2) {
  if (v1.ids() != v2.ids() || v1.m() != v2.m()) {
    throw InvalidArgument("DistanceH: pair vectors over different classes or sample counts");
  }
  double best = 0.0;
  const auto e1 = v1.entries();
  const auto e2 = v2.entries();
  for (std::size_t k = 0; k < e1.size(); ++k) best = std::max(best, std::abs(e1[k] - e2[k]));
  return best;
}

double DistancePR(const Hypothesis& g1, const Hypothesis& g2, std::span<const InputId> xs) {
  if (xs.empty()) throw InvalidArgument("DistancePR: empty input list");
  double sum = 0.0;
  for (InputId x : xs) {
    const LabelSet a = g1(x);
    const LabelSet b = g2(x);
    if (!a.empty()) {
      sum += static_cast<double>(DifferenceSize(a, b)) / static_cast<double>(a.size());
    }
    if (!b.empty()) {
      sum += static_cast<double>(DifferenceSize(b, a)) / static_cast<double>(b.size());
    }
  }
  return sum / static_cast<double>(xs.size());
}

LearnerOutput SurrogateRealizable(const HypothesisClass& hypotheses, const TrainingSet& data,
                                  double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidArgument("surrogate_realizable: epsilon must be > 0");
  if (data.empty()) throw InvalidArgument("surrogate_realizable: empty training set");
  const auto xs = data.inputs();
  const ClassImage image(hypotheses, xs);
  const PairVector empirical = PairVectorEmpirical(data, hypotheses);
  const std::size_t k = hypotheses.size();

  LearnerOutput out;
  out.learner = "surrogate_realizable";
  out.mistakes = MistakeCounts(image, data);
  out.objective.assign(k, 0.0);
  out.plausible.assign(k, false);
  std::optional<std::size_t> chosen;
  for (std::size_t g = 0; g < k; ++g) {
    bool covers = true;
    for (std::size_t other = 0; other < k && covers; ++other) {
      covers = empirical.at(other, g) == 0.0;
    }
    out.plausible[g] = covers;
    const std::vector<double> own = OwnRow(image, g);
    double unobserved = 0.0;
    for (std::size_t other = 0; other < k; ++other) {
      if (empirical.at(g, other) == 0.0) unobserved = std::max(unobserved, own[other]);
    }
    out.objective[g] = unobserved;
    if (!chosen && covers && unobserved < epsilon) chosen = g;
  }
  if (!chosen) {
    throw LearnerFailure("surrogate_realizable: no member passes both conditions at this sample size",
                         true);
  }
  Choose(out, hypotheses, *chosen);
  return out;
}

LearnerOutput SurrogateAgnostic(const HypothesisClass& hypotheses, const TrainingSet& data) {
  if (data.empty()) throw InvalidArgument("surrogate_agnostic: empty training set");
  const auto xs = data.inputs();
  const ClassImage image(hypotheses, xs);
  const PairVector empirical = PairVectorEmpirical(data, hypotheses);
  const std::size_t k = hypotheses.size();
  const double m = static_cast<double>(data.size());

  LearnerOutput out;
  out.learner = "surrogate_agnostic";
  out.mistakes = MistakeCounts(image, data);
  out.objective.assign(k, 0.0);
  out.plausible.assign(k, true);
  std::size_t best = 0;
  for (std::size_t g = 0; g < k; ++g) {
    PairVector v(MemberIds(hypotheses), data.size());
    for (std::size_t d = 0; d < image.num_distinct(); ++d) {
      AccumulateAt(image.at_distinct(g, d), image, d,
                   static_cast<double>(image.multiplicity(d)) / m, v);
    }
    out.objective[g] = DistanceH(empirical, v);
    if (out.objective[g] < out.objective[best]) best = g;
  }
  Choose(out, hypotheses, best);
  return out;
}

}  // namespace pacsets
