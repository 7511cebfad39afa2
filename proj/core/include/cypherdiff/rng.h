// Copyright 2026 The cypherdiff Authors.
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

#ifndef CYPHERDIFF_RNG_H_
#define CYPHERDIFF_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace cypherdiff {

// Seedable, splittable random source.
//
// All draws go through the raw 64-bit engine output so sequences are identical
// across standard library implementations (std distributions are not). Child
// generators are derived from the seed and a name, never from the parent's
// stream position, so adding a consumer never perturbs its siblings.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n);

  // Uniform double in [0, 1).
  double uniform_real();

  bool chance(double p) { return uniform_real() < p; }

  // Picks an index with probability proportional to weights[i].
  std::size_t weighted_index(std::span<const double> weights);

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[index(items.size())];
  }

  Rng child(std::string_view name, std::uint64_t ordinal = 0) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_RNG_H_
