// Copyright 2026 The djsim developers
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

#pragma once

#include <cstdint>
#include <initializer_list>

namespace djsim {

/// Counter-based pseudo-random stream (SplitMix64).
///
/// A stream is a pure function of its key and a call counter, so the
/// sequence named by (seed, key path) is identical no matter which thread
/// runs it or how trials are scheduled.  Monte Carlo code derives one
/// stream per trial via keyed(); draws inside a trial advance the counter
/// sequentially.
class SplitStream {
 public:
  using result_type = std::uint64_t;

  explicit SplitStream(std::uint64_t key) : state_(key) {}

  /// Derives the substream for `seed` refined by a key path, e.g.
  /// {stream_salt, trial_index}.  Each path element is folded through the
  /// mixer so sibling substreams do not overlap statistically.
  static SplitStream keyed(std::uint64_t seed,
                           std::initializer_list<std::uint64_t> path) {
    std::uint64_t key = finalize(seed + kGolden);
    for (std::uint64_t element : path) {
      key = finalize(key ^ finalize(element + kGolden));
    }
    return SplitStream(key);
  }

  std::uint64_t next_u64() { return finalize(state_ += kGolden); }

  /// Uniform draw from [0, bound); bound must be nonzero.  Rejects the
  /// non-divisible tail of the 64-bit range, so the result is exactly
  /// uniform for any bound.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t cutoff = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t draw = next_u64();
    while (draw < cutoff) draw = next_u64();
    return draw % bound;
  }

  /// Bernoulli draw: true with probability num/den, integer arithmetic only.
  bool next_with_probability(std::uint64_t num, std::uint64_t den) {
    return next_below(den) < num;
  }

  // UniformRandomBitGenerator interface.
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }
  std::uint64_t operator()() { return next_u64(); }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

/// Salts separating the independent random streams of the toolkit.
namespace stream_salt {
inline constexpr std::uint64_t kEnsemble = 0x656e73656d626c65ULL;
inline constexpr std::uint64_t kClassical = 0x636c61737369636cULL;
inline constexpr std::uint64_t kSampling = 0x73616d706c696e67ULL;
}  // namespace stream_salt

}  // namespace djsim
