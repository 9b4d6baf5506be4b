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

#ifndef PACSETS_LABEL_SET_H_
#define PACSETS_LABEL_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pacsets {

using LabelId = std::int64_t;

// Closed range [lo, hi] of label ids.
struct LabelInterval {
  LabelId lo;
  LabelId hi;

  std::uint64_t length() const {
    return static_cast<std::uint64_t>(hi - lo) + 1;
  }
  friend bool operator==(const LabelInterval&, const LabelInterval&) = default;
};

// A finite set of labels stored as a sorted list of disjoint, non-adjacent
// closed intervals. Per-input label universes can be astronomically large
// (a target of 10^6 labels is two intervals), so nothing here enumerates
// elements unless asked to.
class LabelSet {
 public:
  LabelSet() = default;

  // [lo, hi]; empty when hi < lo.
  static LabelSet Range(LabelId lo, LabelId hi);
  static LabelSet Of(std::initializer_list<LabelId> labels);
  // Any order, duplicates allowed.
  static LabelSet FromLabels(std::span<const LabelId> labels);
  // Arbitrary (possibly overlapping or unsorted) intervals; canonicalized.
  static LabelSet FromIntervals(std::vector<LabelInterval> intervals);

  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::span<const LabelInterval> intervals() const { return intervals_; }

  bool contains(LabelId label) const;
  // k-th smallest element, 0-based. Requires k < size().
  LabelId nth(std::uint64_t k) const;
  // Materializes every element. Only for small sets.
  std::vector<LabelId> ToVector() const;
  std::string ToString() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  explicit LabelSet(std::vector<LabelInterval> canonical);

  std::vector<LabelInterval> intervals_;
  std::uint64_t size_ = 0;
};

LabelSet Union(const LabelSet& a, const LabelSet& b);
LabelSet Intersection(const LabelSet& a, const LabelSet& b);
// a \ b
LabelSet Difference(const LabelSet& a, const LabelSet& b);

std::uint64_t IntersectionSize(const LabelSet& a, const LabelSet& b);
// |a \ b|
std::uint64_t DifferenceSize(const LabelSet& a, const LabelSet& b);
bool IsSubset(const LabelSet& a, const LabelSet& b);

}  // namespace pacsets

#endif  // PACSETS_LABEL_SET_H_
