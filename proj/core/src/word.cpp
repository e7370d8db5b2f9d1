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

#include "revgate/word.hpp"

#include <charconv>
#include <numeric>

#include "revgate/error.hpp"

namespace revgate {

void check_alphabet(unsigned q) {
  if (q < 2) throw Error("alphabet size must be at least 2, got " + std::to_string(q));
}

std::uint64_t table_size(unsigned q, unsigned n) {
  check_alphabet(q);
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= q;
    if (size > kMaxTableSize) {
      throw ResourceError("q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                          " exceeds the table cap of 2^24 words");
    }
  }
  return size;
}

Word::Word(unsigned q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
  check_alphabet(q);
  for (Symbol s : symbols_) {
    if (s >= q) throw Error("symbol " + std::to_string(s) + " out of range for alphabet size " + std::to_string(q));
  }
}

Word Word::parse(unsigned q, std::string_view text) {
  check_alphabet(q);
  std::vector<Symbol> symbols;
  if (text.empty() || text == "-") return Word(q, {});
  if (text.find('.') != std::string_view::npos || q > 10) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('.', pos);
      if (end == std::string_view::npos) end = text.size();
      auto part = text.substr(pos, end - pos);
      Symbol value = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
        throw Error("malformed word '" + std::string(text) + "'");
      }
      symbols.push_back(value);
      pos = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw Error("malformed word '" + std::string(text) + "'");
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
  }
  return Word(q, std::move(symbols));
}

Word Word::concat(const Word& other) const {
  if (other.q_ != q_) throw Error("cannot concatenate words over different alphabets");
  std::vector<Symbol> s = symbols_;
  s.insert(s.end(), other.symbols_.begin(), other.symbols_.end());
  return Word(q_, std::move(s));
}

std::string Word::to_string() const {
  if (symbols_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (q_ <= 10) {
      out.push_back(static_cast<char>('0' + symbols_[i]));
    } else {
      if (i) out.push_back('.');
      out += std::to_string(symbols_[i]);
    }
  }
  return out;
}

Code word_encode(const Word& w) {
  std::uint64_t code = 0;
  for (Symbol s : w.symbols()) code = code * w.q() + s;
  if (code >= kMaxTableSize && w.size() > 0) table_size(w.q(), static_cast<unsigned>(w.size()));
  return static_cast<Code>(code);
}

Word word_decode(Code code, unsigned n, unsigned q) {
  const std::uint64_t size = table_size(q, n);
  if (code >= size) {
    throw Error("code " + std::to_string(code) + " out of range for " + std::to_string(q) + "^" + std::to_string(n));
  }
  std::vector<Symbol> symbols(n);
  for (unsigned i = n; i-- > 0;) {
    symbols[i] = code % q;
    code /= q;
  }
  return Word(q, std::move(symbols));
}

std::size_t WeightVector::total() const { return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0}); }

WeightVector weight(const Word& w) {
  std::vector<std::uint32_t> counts(w.q(), 0);
  for (Symbol s : w.symbols()) ++counts[s];
  return WeightVector(std::move(counts));
}

}  // namespace revgate
