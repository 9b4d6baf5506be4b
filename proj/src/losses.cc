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

#include "pacsets/losses.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pacsets/errors.h"

namespace pacsets {
namespace {

void RequireTarget(const LabelSet& target) {
  if (target.empty()) throw ModelViolation("target set is empty");
}

}  // namespace

double PrecisionLoss(const LabelSet& output, const LabelSet& target) {
  RequireTarget(target);
  if (output.empty()) return 0.0;
  return static_cast<double>(DifferenceSize(output, target)) /
         static_cast<double>(output.size());
}

double RecallLoss(const LabelSet& output, const LabelSet& target) {
  RequireTarget(target);
  return static_cast<double>(DifferenceSize(target, output)) /
         static_cast<double>(target.size());
}

LossReport Losses(const LabelSet& output, const LabelSet& target) {
  return LossReport::From(PrecisionLoss(output, target), RecallLoss(output, target));
}

double PrecisionLossAt(const Hypothesis& g, const Hypothesis& target, InputId x) {
  return PrecisionLoss(g(x), target(x));
}

double RecallLossAt(const Hypothesis& g, const Hypothesis& target, InputId x) {
  return RecallLoss(g(x), target(x));
}

LossReport EmpiricalLosses(const Hypothesis& g, const Hypothesis& target,
                           std::span<const InputId> xs) {
  if (xs.empty()) throw InvalidArgument("EmpiricalLosses: empty input list");
  double precision = 0.0, recall = 0.0;
  for (InputId x : xs) {
    const LabelSet out = g(x);
    const LabelSet truth = target(x);
    precision += PrecisionLoss(out, truth);
    recall += RecallLoss(out, truth);
  }
  const double m = static_cast<double>(xs.size());
  return LossReport::From(precision / m, recall / m);
}

std::vector<FrontierPoint> ParetoFrontier(std::span<const FrontierPoint> points) {
  // Sweep by ascending precision loss. Within a group of equal precision
  // only the minimal recall survives, and only if every strictly better
  // precision group has strictly worse recall.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].precision_loss < points[b].precision_loss;
  });
  std::vector<bool> keep(points.size(), false);
  double best_recall = std::numeric_limits<double>::infinity();
  for (std::size_t start = 0; start < order.size();) {
    std::size_t stop = start;
    double group_min = std::numeric_limits<double>::infinity();
    while (stop < order.size() &&
           points[order[stop]].precision_loss == points[order[start]].precision_loss) {
      group_min = std::min(group_min, points[order[stop]].recall_loss);
      ++stop;
    }
    if (group_min < best_recall) {
      for (std::size_t k = start; k < stop; ++k) {
        if (points[order[k]].recall_loss == group_min) keep[order[k]] = true;
      }
      best_recall = group_min;
    }
    start = stop;
  }
  std::vector<FrontierPoint> frontier;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (keep[i]) frontier.push_back(points[i]);
  }
  return frontier;
}

}  // namespace pacsets
