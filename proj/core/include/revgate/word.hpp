// Copyright 2026 The revgate Authors
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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace revgate {

using Symbol = std::uint32_t;
using Code = std::uint32_t;

/// Largest q^n table the library will materialize.
inline constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 24;

/// Validates an alphabet size (q >= 2); throws Error otherwise.
void check_alphabet(unsigned q);

/// q^n, throwing ResourceError when it exceeds kMaxTableSize.
std::uint64_t table_size(unsigned q, unsigned n);

/// A word x_1..x_n over the alphabet {0..q-1}. Position 0 is the leftmost
/// symbol, which is also the most significant digit of the word's code.
class Word {
 public:
  Word() = default;
  Word(unsigned q, std::vector<Symbol> symbols);

  /// Parses "0120" style digit strings (q <= 10) or dot-separated decimal
  /// symbols ("11.3.0"); "-" and "" denote the empty word.
  static Word parse(unsigned q, std::string_view text);

  unsigned q() const { return q_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  Word concat(const Word& other) const;

  /// Inverse of parse: digits for q <= 10, dot-separated otherwise, "-" when empty.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  unsigned q_ = 2;
  std::vector<Symbol> symbols_;
};

/// Big-endian radix code: sum x_i * q^(n-1-i).
Code word_encode(const Word& w);

/// Inverse of word_encode; throws Error when code >= q^n.
Word word_decode(Code code, unsigned n, unsigned q);

/// Symbol-count vector of a word.
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {}

  const std::vector<std::uint32_t>& counts() const { return counts_; }
  std::uint32_t operator[](Symbol a) const { return counts_[a]; }
  std::size_t total() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::uint32_t> counts_;
};

WeightVector weight(const Word& w);

}  // namespace revgate
