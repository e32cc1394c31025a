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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "djsim/rng.hpp"

namespace djsim {

/// Promise classes of f: {0,1}^n -> {0,1}.  Neither is representable so
/// that classification is total, but no generator ever produces it.
enum class FunctionClass { Constant0, Constant1, Balanced, Neither };

const char* to_string(FunctionClass c);

/// Thrown when a request exceeds a size guard; the message names the bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Explicit truth table of f: {0,1}^n -> {0,1}, bit-packed, 1 <= n <= 20.
///
/// Immutable after construction and safe to share across threads.
class TruthTable {
 public:
  /// Largest argument width with a materialized table (1 MiB of bits).
  static constexpr int kMaxArgumentBits = 20;

  /// Builds from packed 64-bit words, f(x) at bit (x & 63) of word (x >> 6).
  /// Bits above 2^n in the last word must be zero.
  TruthTable(int n, std::vector<std::uint64_t> packed);

  static TruthTable constant(int n, bool value);

  /// Builds from a character string like "0110"; length fixes n.
  static TruthTable from_bit_string(std::string_view bits);

  int argument_bits() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  /// f(x).  Throws std::domain_error when x >= 2^n.
  bool evaluate(std::uint64_t x) const;

  std::uint64_t ones_count() const;

  std::string to_bit_string() const;

  bool operator==(const TruthTable& other) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

FunctionClass classify(const TruthTable& f);

/// Serializes as "n=<n>:<hex>".  Hex digits carry the table bits
/// most-significant-first, so f(0) is the top bit of the first digit; for
/// n = 1 the low two bits of the single digit are zero padding.
std::string format_truth_table(const TruthTable& f);

/// Inverse of format_truth_table.  Throws std::invalid_argument on
/// malformed input (bad prefix, wrong digit count, nonzero padding).
TruthTable parse_truth_table(std::string_view text);

/// Balanced function materialized lazily: each first query of an input
/// draws its bit hypergeometrically from the unassigned slots (ones left
/// over slots left), which makes the completed table exactly uniform over
/// all C(2^n, 2^(n-1)) balanced tables without storing 2^n bits.
///
/// Mutates on query; each Monte Carlo trial owns its own instance.
class LazyBalancedFunction {
 public:
  static constexpr int kMaxArgumentBits = 62;

  /// Fresh function with 2^(n-1) zeros and ones remaining, nothing assigned.
  explicit LazyBalancedFunction(int n);

  int argument_bits() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  /// f(x); the first query of x fixes the bit, later queries replay it.
  /// Throws std::domain_error when x >= 2^n.
  bool evaluate(std::uint64_t x, SplitStream& rng);

  std::uint64_t remaining_zeros() const { return remaining_zeros_; }
  std::uint64_t remaining_ones() const { return remaining_ones_; }
  std::uint64_t assigned_count() const { return assigned_.size(); }

  /// The completed table, once every input has been queried (n <= 20).
  std::optional<TruthTable> to_truth_table() const;

 private:
  int n_;
  std::uint64_t remaining_zeros_;
  std::uint64_t remaining_ones_;
  std::unordered_map<std::uint64_t, bool> assigned_;
};

/// Uniform evaluation entry point for oracle consumers: explicit tables
/// ignore the stream, lazy functions draw from it.
inline bool evaluate(const TruthTable& f, std::uint64_t x, SplitStream&) {
  return f.evaluate(x);
}
inline bool evaluate(LazyBalancedFunction& f, std::uint64_t x,
                     SplitStream& rng) {
  return f.evaluate(x, rng);
}

inline constexpr int kDefaultEnumerationGuard = 4;

/// Streams every balanced table on n argument bits exactly once, in
/// lexicographic order of the bit string f(0) f(1) ... f(2^n - 1).
///
/// Guarded by max_n (default 4, i.e. C(16,8) = 12870 tables); the
/// implementation itself tops out at n = 6 (single-word stepping).
class BalancedEnumerator {
 public:
  explicit BalancedEnumerator(int n, int max_n = kDefaultEnumerationGuard);

  /// Next table, or nullopt once exhausted.
  std::optional<TruthTable> next();

 private:
  int n_;
  std::uint64_t current_;
  std::uint64_t last_;
  bool done_;
};

/// Convenience: the full enumeration as a vector (intended for n <= 4).
std::vector<TruthTable> enumerate_balanced(
    int n, int max_n = kDefaultEnumerationGuard);

}  // namespace djsim
