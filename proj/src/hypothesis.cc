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

#include "pacsets/hypothesis.h"

#include <set>
#include <unordered_map>

#include "pacsets/errors.h"

namespace pacsets {

Hypothesis::Hypothesis(std::string id, HypothesisKind kind, std::shared_ptr<const Rule> rule,
                       std::shared_ptr<const Table> table)
    : id_(std::move(id)), kind_(kind), rule_(std::move(rule)), table_(std::move(table)) {}

Hypothesis Hypothesis::Intensional(std::string id, Rule rule) {
  if (!rule) throw InvalidArgument("Hypothesis '" + id + "': null rule");
  return Hypothesis(std::move(id), HypothesisKind::kIntensional,
                    std::make_shared<const Rule>(std::move(rule)), nullptr);
}

Hypothesis Hypothesis::Constant(std::string id, LabelSet output) {
  return Intensional(std::move(id), [output = std::move(output)](InputId) { return output; });
}

Hypothesis Hypothesis::Extensional(std::string id, Table table) {
  return Hypothesis(std::move(id), HypothesisKind::kExtensional, nullptr,
                    std::make_shared<const Table>(std::move(table)));
}

LabelSet Hypothesis::operator()(InputId x) const {
  if (table_) {
    auto it = table_->find(x);
    return it == table_->end() ? LabelSet() : it->second;
  }
  return (*rule_)(x);
}

HypothesisClass::HypothesisClass(std::vector<Hypothesis> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("HypothesisClass: must have at least one member");
  std::set<std::string> seen;
  for (const auto& h : members_) {
    if (!seen.insert(h.id()).second) {
      throw InvalidArgument("HypothesisClass: duplicate id '" + h.id() + "'");
    }
  }
}

std::optional<std::size_t> HypothesisClass::IndexOf(const std::string& id) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].id() == id) return i;
  }
  return std::nullopt;
}

const Hypothesis& HypothesisClass::Get(const std::string& id) const {
  auto index = IndexOf(id);
  if (!index) throw InvalidArgument("HypothesisClass: no member '" + id + "'");
  return members_[*index];
}

ClassImage::ClassImage(const HypothesisClass& hypotheses, std::span<const InputId> xs)
    : num_members_(hypotheses.size()) {
  std::unordered_map<InputId, std::size_t> slot;
  slot.reserve(xs.size());
  sample_to_distinct_.reserve(xs.size());
  for (InputId x : xs) {
    auto [it, inserted] = slot.try_emplace(x, distinct_.size());
    if (inserted) {
      distinct_.push_back(x);
      multiplicity_.push_back(0);
    }
    ++multiplicity_[it->second];
    sample_to_distinct_.push_back(it->second);
  }
  sets_.reserve(num_members_ * distinct_.size());
  for (const auto& h : hypotheses) {
    for (InputId x : distinct_) sets_.push_back(h(x));
  }
}

}  // namespace pacsets
