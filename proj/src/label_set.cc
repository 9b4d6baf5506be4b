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

#include "pacsets/label_set.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "pacsets/errors.h"

namespace pacsets {
namespace {

std::uint64_t TotalLength(const std::vector<LabelInterval>& intervals) {
  std::uint64_t total = 0;
  for (const auto& iv : intervals) total += iv.length();
  return total;
}

// Merges sorted-by-lo intervals that overlap or touch.
std::vector<LabelInterval> Coalesce(std::vector<LabelInterval> sorted) {
  std::vector<LabelInterval> out;
  out.reserve(sorted.size());
  for (const auto& iv : sorted) {
    if (!out.empty() && (out.back().hi == std::numeric_limits<LabelId>::max() ||
                         iv.lo <= out.back().hi + 1)) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

}  // namespace

LabelSet::LabelSet(std::vector<LabelInterval> canonical)
    : intervals_(std::move(canonical)), size_(TotalLength(intervals_)) {}

LabelSet LabelSet::Range(LabelId lo, LabelId hi) {
  if (hi < lo) return LabelSet();
  return LabelSet({LabelInterval{lo, hi}});
}

LabelSet LabelSet::Of(std::initializer_list<LabelId> labels) {
  return FromLabels(std::span<const LabelId>(labels.begin(), labels.size()));
}

LabelSet LabelSet::FromLabels(std::span<const LabelId> labels) {
  std::vector<LabelId> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<LabelInterval> intervals;
  for (LabelId label : sorted) {
    if (!intervals.empty() && label <= intervals.back().hi + 1) {
      intervals.back().hi = std::max(intervals.back().hi, label);
    } else {
      intervals.push_back({label, label});
    }
  }
  return LabelSet(std::move(intervals));
}

LabelSet LabelSet::FromIntervals(std::vector<LabelInterval> intervals) {
  std::erase_if(intervals, [](const LabelInterval& iv) { return iv.hi < iv.lo; });
  std::sort(intervals.begin(), intervals.end(),
            [](const LabelInterval& a, const LabelInterval& b) { return a.lo < b.lo; });
  return LabelSet(Coalesce(std::move(intervals)));
}

bool LabelSet::contains(LabelId label) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), label,
      [](LabelId value, const LabelInterval& iv) { return value < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return label <= it->hi;
}

LabelId LabelSet::nth(std::uint64_t k) const {
  for (const auto& iv : intervals_) {
    if (k < iv.length()) return iv.lo + static_cast<LabelId>(k);
    k -= iv.length();
  }
  throw InvalidArgument("LabelSet::nth: index out of range");
}

std::vector<LabelId> LabelSet::ToVector() const {
  std::vector<LabelId> out;
  out.reserve(size_);
  for (const auto& iv : intervals_) {
    for (LabelId v = iv.lo;; ++v) {
      out.push_back(v);
      if (v == iv.hi) break;
    }
  }
  return out;
}

std::string LabelSet::ToString() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) os << ',';
    os << intervals_[i].lo;
    if (intervals_[i].hi != intervals_[i].lo) os << ".." << intervals_[i].hi;
  }
  os << '}';
  return os.str();
}

LabelSet Union(const LabelSet& a, const LabelSet& b) {
  std::vector<LabelInterval> all;
  all.reserve(a.intervals().size() + b.intervals().size());
  std::merge(a.intervals().begin(), a.intervals().end(), b.intervals().begin(),
             b.intervals().end(), std::back_inserter(all),
             [](const LabelInterval& x, const LabelInterval& y) { return x.lo < y.lo; });
  return LabelSet::FromIntervals(std::move(all));
}

LabelSet Intersection(const LabelSet& a, const LabelSet& b) {
  std::vector<LabelInterval> out;
  auto ia = a.intervals().begin(), ib = b.intervals().begin();
  while (ia != a.intervals().end() && ib != b.intervals().end()) {
    LabelId lo = std::max(ia->lo, ib->lo);
    LabelId hi = std::min(ia->hi, ib->hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (ia->hi < ib->hi) ++ia; else ++ib;
  }
  return LabelSet::FromIntervals(std::move(out));
}

LabelSet Difference(const LabelSet& a, const LabelSet& b) {
  std::vector<LabelInterval> out;
  auto ib = b.intervals().begin();
  for (const auto& iv : a.intervals()) {
    LabelId lo = iv.lo;
    bool exhausted = false;
    while (ib != b.intervals().end() && ib->hi < lo) ++ib;
    for (auto it = ib; it != b.intervals().end() && it->lo <= iv.hi; ++it) {
      if (it->lo > lo) out.push_back({lo, it->lo - 1});
      if (it->hi >= iv.hi) {
        exhausted = true;
        break;
      }
      lo = it->hi + 1;
    }
    if (!exhausted) out.push_back({lo, iv.hi});
  }
  return LabelSet::FromIntervals(std::move(out));
}

std::uint64_t IntersectionSize(const LabelSet& a, const LabelSet& b) {
  std::uint64_t total = 0;
  auto ia = a.intervals().begin(), ib = b.intervals().begin();
  while (ia != a.intervals().end() && ib != b.intervals().end()) {
    LabelId lo = std::max(ia->lo, ib->lo);
    LabelId hi = std::min(ia->hi, ib->hi);
    if (lo <= hi) total += static_cast<std::uint64_t>(hi - lo) + 1;
    if (ia->hi < ib->hi) ++ia; else ++ib;
  }
  return total;
}

std::uint64_t DifferenceSize(const LabelSet& a, const LabelSet& b) {
  return a.size() - IntersectionSize(a, b);
}

bool IsSubset(const LabelSet& a, const LabelSet& b) {
  return IntersectionSize(a, b) == a.size();
}

}  // namespace pacsets
