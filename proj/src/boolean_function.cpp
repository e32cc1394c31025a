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

#include "djsim/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace djsim {

namespace {

void check_argument_bits(int n, int max_n, const char* what) {
  if (n < 1) {
    throw std::domain_error(std::string(what) +
                            ": argument width must be at least 1");
  }
  if (n > max_n) {
    throw std::domain_error(std::string(what) + ": argument width " +
                            std::to_string(n) + " exceeds limit " +
                            std::to_string(max_n));
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

const char* to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Constant0: return "constant0";
    case FunctionClass::Constant1: return "constant1";
    case FunctionClass::Balanced: return "balanced";
    case FunctionClass::Neither: return "neither";
  }
  return "?";
}

TruthTable::TruthTable(int n, std::vector<std::uint64_t> packed)
    : n_(n), words_(std::move(packed)) {
  check_argument_bits(n, kMaxArgumentBits, "truth table");
  const std::uint64_t bits = size();
  const std::size_t expected = static_cast<std::size_t>((bits + 63) / 64);
  if (words_.size() != expected) {
    throw std::invalid_argument("truth table: wrong packed word count");
  }
  if (bits % 64 != 0 && (words_.back() >> (bits % 64)) != 0) {
    throw std::invalid_argument("truth table: nonzero bits beyond 2^n");
  }
}

TruthTable TruthTable::constant(int n, bool value) {
  check_argument_bits(n, kMaxArgumentBits, "truth table");
  const std::uint64_t bits = std::uint64_t{1} << n;
  std::vector<std::uint64_t> words((bits + 63) / 64, 0);
  if (value) {
    for (auto& w : words) w = ~std::uint64_t{0};
    if (bits % 64 != 0) words.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
  }
  return TruthTable(n, std::move(words));
}

TruthTable TruthTable::from_bit_string(std::string_view bits) {
  if (bits.empty() || (bits.size() & (bits.size() - 1)) != 0) {
    throw std::invalid_argument("bit string length must be a power of two");
  }
  int n = std::countr_zero(bits.size());
  if (n < 1) throw std::invalid_argument("bit string needs at least 2 bits");
  std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
  for (std::size_t x = 0; x < bits.size(); ++x) {
    if (bits[x] == '1') {
      words[x >> 6] |= std::uint64_t{1} << (x & 63);
    } else if (bits[x] != '0') {
      throw std::invalid_argument("bit string may contain only 0 and 1");
    }
  }
  return TruthTable(n, std::move(words));
}

bool TruthTable::evaluate(std::uint64_t x) const {
  if (x >= size()) {
    throw std::domain_error("truth table: input " + std::to_string(x) +
                            " outside [0, 2^" + std::to_string(n_) + ")");
  }
  return (words_[x >> 6] >> (x & 63)) & 1;
}

std::uint64_t TruthTable::ones_count() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::string TruthTable::to_bit_string() const {
  std::string out(size(), '0');
  for (std::uint64_t x = 0; x < size(); ++x) {
    if ((words_[x >> 6] >> (x & 63)) & 1) out[x] = '1';
  }
  return out;
}

FunctionClass classify(const TruthTable& f) {
  const std::uint64_t ones = f.ones_count();
  if (ones == 0) return FunctionClass::Constant0;
  if (ones == f.size()) return FunctionClass::Constant1;
  if (ones == f.size() / 2) return FunctionClass::Balanced;
  return FunctionClass::Neither;
}

std::string format_truth_table(const TruthTable& f) {
  static constexpr char digits[] = "0123456789abcdef";
  const std::uint64_t bits = f.size();
  std::string out = "n=" + std::to_string(f.argument_bits()) + ":";
  for (std::uint64_t pos = 0; pos < bits; pos += 4) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      nibble <<= 1;
      if (pos + b < bits && f.evaluate(pos + b)) nibble |= 1;
    }
    out += digits[nibble];
  }
  return out;
}

TruthTable parse_truth_table(std::string_view text) {
  if (text.substr(0, 2) != "n=") {
    throw std::invalid_argument("truth table text must start with \"n=\"");
  }
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("truth table text missing ':'");
  }
  int n = 0;
  const auto* begin = text.data() + 2;
  const auto* end = text.data() + colon;
  auto [ptr, ec] = std::from_chars(begin, end, n);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("truth table text has malformed width");
  }
  if (n < 1 || n > TruthTable::kMaxArgumentBits) {
    throw std::invalid_argument("truth table width outside [1, 20]");
  }
  const std::uint64_t bits = std::uint64_t{1} << n;
  std::string_view hex = text.substr(colon + 1);
  if (hex.size() != (bits + 3) / 4) {
    throw std::invalid_argument("truth table text has wrong digit count");
  }
  std::vector<std::uint64_t> words((bits + 63) / 64, 0);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const int value = hex_value(hex[d]);
    if (value < 0) throw std::invalid_argument("non-hex digit in truth table");
    for (int b = 0; b < 4; ++b) {
      if (((value >> (3 - b)) & 1) == 0) continue;
      const std::uint64_t x = 4 * d + static_cast<std::uint64_t>(b);
      if (x >= bits) {
        throw std::invalid_argument("truth table padding bits must be zero");
      }
      words[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
  }
  return TruthTable(n, std::move(words));
}

LazyBalancedFunction::LazyBalancedFunction(int n) : n_(n) {
  check_argument_bits(n, kMaxArgumentBits, "lazy balanced function");
  remaining_zeros_ = std::uint64_t{1} << (n - 1);
  remaining_ones_ = remaining_zeros_;
}

bool LazyBalancedFunction::evaluate(std::uint64_t x, SplitStream& rng) {
  if (x >= size()) {
    throw std::domain_error("lazy balanced function: input " +
                            std::to_string(x) + " outside [0, 2^" +
                            std::to_string(n_) + ")");
  }
  if (auto it = assigned_.find(x); it != assigned_.end()) return it->second;
  // Hypergeometric step: the bit is 1 with probability ones/(zeros+ones)
  // over the slots not yet fixed.
  const std::uint64_t open = remaining_zeros_ + remaining_ones_;
  const bool bit = rng.next_with_probability(remaining_ones_, open);
  if (bit) {
    --remaining_ones_;
  } else {
    --remaining_zeros_;
  }
  assigned_.emplace(x, bit);
  return bit;
}

std::optional<TruthTable> LazyBalancedFunction::to_truth_table() const {
  if (n_ > TruthTable::kMaxArgumentBits) return std::nullopt;
  if (assigned_.size() != size()) return std::nullopt;
  const std::uint64_t bits = size();
  std::vector<std::uint64_t> words((bits + 63) / 64, 0);
  for (const auto& [x, bit] : assigned_) {
    if (bit) words[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  return TruthTable(n_, std::move(words));
}

BalancedEnumerator::BalancedEnumerator(int n, int max_n) {
  // Single-word stepping bounds the machinery at n = 6 (64 table bits);
  // the configurable guard normally kicks in well before that.
  constexpr int kImplementationBound = 6;
  const int bound = std::min(max_n, kImplementationBound);
  if (n < 1) {
    throw std::domain_error("balanced enumeration: n must be at least 1");
  }
  if (n > bound) {
    throw ResourceLimitError(
        "balanced enumeration: n=" + std::to_string(n) +
        " exceeds the enumeration bound n<=" + std::to_string(bound));
  }
  n_ = n;
  const int bits = 1 << n;
  // Lexicographically first table 0...01...1 maps to the low 2^(n-1) bits
  // set, since bit (2^n - 1 - x) of the word holds f(x).
  current_ = (std::uint64_t{1} << (bits / 2)) - 1;
  last_ = current_ << (bits / 2);
  done_ = false;
}

std::optional<TruthTable> BalancedEnumerator::next() {
  if (done_) return std::nullopt;
  const int bits = 1 << n_;
  std::vector<std::uint64_t> words((static_cast<std::uint64_t>(bits) + 63) / 64,
                                   0);
  for (int x = 0; x < bits; ++x) {
    if ((current_ >> (bits - 1 - x)) & 1) {
      words[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
  }
  TruthTable table(n_, std::move(words));
  if (current_ == last_) {
    done_ = true;
  } else {
    // Gosper's hack: next word with the same popcount.
    const std::uint64_t low = current_ & (0 - current_);
    const std::uint64_t ripple = current_ + low;
    current_ = ripple | (((current_ ^ ripple) >> 2) / low);
  }
  return table;
}

std::vector<TruthTable> enumerate_balanced(int n, int max_n) {
  BalancedEnumerator stream(n, max_n);
  std::vector<TruthTable> all;
  while (auto table = stream.next()) all.push_back(std::move(*table));
  return all;
}

}  // namespace djsim
