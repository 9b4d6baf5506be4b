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

#include "pacsets/random.h"

#include <limits>

#include "pacsets/errors.h"

namespace pacsets {

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t HashTag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(Mix64(seed)) {}

RandomStream RandomStream::Split(std::uint64_t tag) const {
  return RandomStream(Mix64(seed_ ^ Mix64(tag + 0x632be59bd9b4e019ULL)));
}

std::uint64_t RandomStream::UniformBelow(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("UniformBelow: empty range");
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
}

double RandomStream::Uniform01() {
  // 53 random bits -> [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

InputId RandomStream::MintInputId() {
  if (minted_ > std::numeric_limits<std::uint32_t>::max()) {
    throw Error("RandomStream: fresh input ids exhausted for this stream");
  }
  const std::uint64_t signature = Mix64(seed_ ^ 0x5851f42d4c957f2dULL) & 0xffffffff00000000ULL;
  return signature | minted_++;
}

}  // namespace pacsets
