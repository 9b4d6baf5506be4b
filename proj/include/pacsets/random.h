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

#ifndef PACSETS_RANDOM_H_
#define PACSETS_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace pacsets {

using InputId = std::uint64_t;

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);
// FNV-1a, used to turn string tags into split keys.
std::uint64_t HashTag(std::string_view tag);

// A seeded random stream that can be split into independent children.
//
// Splitting is counter-based: the child seed is a pure function of the
// parent seed and the tag, so adding a child never perturbs its siblings.
// A stream also mints fresh input ids for fresh-stream worlds; ids carry
// the stream's 32-bit signature in the high half and a per-stream counter
// in the low half, so one stream never emits the same id twice.
//
// Satisfies UniformRandomBitGenerator. Not thread-safe; give every worker
// its own split.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed);

  RandomStream Split(std::uint64_t tag) const;
  RandomStream Split(std::string_view tag) const { return Split(HashTag(tag)); }

  std::uint64_t seed() const { return seed_; }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform on [0, n). Requires n > 0.
  std::uint64_t UniformBelow(std::uint64_t n);
  // Uniform on [0, 1).
  double Uniform01();
  bool Bernoulli(double p) { return Uniform01() < p; }

  InputId MintInputId();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t minted_ = 0;
};

}  // namespace pacsets

#endif  // PACSETS_RANDOM_H_
