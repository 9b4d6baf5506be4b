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

#ifndef PACSETS_HYPOTHESIS_H_
#define PACSETS_HYPOTHESIS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pacsets/label_set.h"
#include "pacsets/random.h"

namespace pacsets {

enum class HypothesisKind { kExtensional, kIntensional };

// A set function: maps every input id to a LabelSet.
//
// Extensional hypotheses carry an explicit table and output the empty set
// on inputs outside it. Intensional hypotheses wrap a rule, which must be
// deterministic. Copies share the underlying (immutable) state.
class Hypothesis {
 public:
  using Rule = std::function<LabelSet(InputId)>;
  using Table = std::map<InputId, LabelSet>;

  static Hypothesis Intensional(std::string id, Rule rule);
  // Same set at every input.
  static Hypothesis Constant(std::string id, LabelSet output);
  static Hypothesis Extensional(std::string id, Table table);

  const std::string& id() const { return id_; }
  HypothesisKind kind() const { return kind_; }

  LabelSet operator()(InputId x) const;
  std::uint64_t OutputSize(InputId x) const { return (*this)(x).size(); }

  // Null for intensional hypotheses.
  const Table* table() const { return table_.get(); }

 private:
  Hypothesis(std::string id, HypothesisKind kind, std::shared_ptr<const Rule> rule,
             std::shared_ptr<const Table> table);

  std::string id_;
  HypothesisKind kind_;
  std::shared_ptr<const Rule> rule_;
  std::shared_ptr<const Table> table_;
};

// Ordered, finite, non-empty list of hypotheses with unique ids. The order
// is fixed and decides every argmin/argmax tie (first member wins).
class HypothesisClass {
 public:
  explicit HypothesisClass(std::vector<Hypothesis> members);

  std::size_t size() const { return members_.size(); }
  const Hypothesis& operator[](std::size_t i) const { return members_[i]; }
  std::span<const Hypothesis> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::optional<std::size_t> IndexOf(const std::string& id) const;
  const Hypothesis& Get(const std::string& id) const;

 private:
  std::vector<Hypothesis> members_;
};

// Every member evaluated once at every distinct input of a sample.
//
// Learners and pair-vector code touch g(x_i) for all members g and all
// indices i, often many times; this table makes those lookups O(1) and
// keeps repeated inputs from being re-evaluated.
class ClassImage {
 public:
  ClassImage(const HypothesisClass& hypotheses, std::span<const InputId> xs);

  std::size_t num_members() const { return num_members_; }
  std::size_t num_samples() const { return sample_to_distinct_.size(); }
  std::size_t num_distinct() const { return distinct_.size(); }

  InputId distinct_input(std::size_t d) const { return distinct_[d]; }
  // How many sample indices map to distinct input d.
  std::size_t multiplicity(std::size_t d) const { return multiplicity_[d]; }
  std::size_t distinct_of(std::size_t i) const { return sample_to_distinct_[i]; }

  const LabelSet& at_distinct(std::size_t member, std::size_t d) const {
    return sets_[member * distinct_.size() + d];
  }
  const LabelSet& at_sample(std::size_t member, std::size_t i) const {
    return at_distinct(member, sample_to_distinct_[i]);
  }

 private:
  std::size_t num_members_;
  std::vector<InputId> distinct_;
  std::vector<std::size_t> multiplicity_;
  std::vector<std::size_t> sample_to_distinct_;
  std::vector<LabelSet> sets_;
};

}  // namespace pacsets

#endif  // PACSETS_HYPOTHESIS_H_
