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

#ifndef PACSETS_LOSSES_H_
#define PACSETS_LOSSES_H_

#include <span>
#include <string>
#include <vector>

#include "pacsets/hypothesis.h"
#include "pacsets/label_set.h"

namespace pacsets {

struct LossReport {
  double precision_loss = 0.0;
  double recall_loss = 0.0;
  double scalar_loss = 0.0;

  static LossReport From(double precision_loss, double recall_loss) {
    return {precision_loss, recall_loss, (precision_loss + recall_loss) / 2.0};
  }
  // 1 - scalar loss.
  double scalar_payoff() const { return 1.0 - scalar_loss; }
};

// Per-input losses on explicit sets.
//
// Precision loss is |output \ target| / |output|, and 0 for an empty
// output. Recall loss is |target \ output| / |target|. An empty target is
// a model violation and throws ModelViolation.
double PrecisionLoss(const LabelSet& output, const LabelSet& target);
double RecallLoss(const LabelSet& output, const LabelSet& target);
LossReport Losses(const LabelSet& output, const LabelSet& target);

double PrecisionLossAt(const Hypothesis& g, const Hypothesis& target, InputId x);
double RecallLossAt(const Hypothesis& g, const Hypothesis& target, InputId x);

// Means of the per-input losses over xs (repeats count repeatedly).
LossReport EmpiricalLosses(const Hypothesis& g, const Hypothesis& target,
                           std::span<const InputId> xs);

struct FrontierPoint {
  std::string id;
  double precision_loss;
  double recall_loss;
};

// Members not dominated by any other point (weakly better in both losses,
// strictly better in one). Input order is preserved.
std::vector<FrontierPoint> ParetoFrontier(std::span<const FrontierPoint> points);

}  // namespace pacsets

#endif  // PACSETS_LOSSES_H_
