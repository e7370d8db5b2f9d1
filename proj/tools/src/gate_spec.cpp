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

#include "gate_spec.hpp"

#include <charconv>
#include <filesystem>
#include <vector>

#include "revgate/algebra.hpp"
#include "revgate/error.hpp"

namespace revgate::cli {

const char* const kGateSpecHelp =
    "Gate specs (words are digit strings, or dot-separated symbols for q > 10):\n"
    "  swap:u,v             word swap (u v); one-symbol words give a symbol swap\n"
    "  cycle:u,v,w,...      word cycle u -> v -> w -> ... -> u\n"
    "  not                  symbol swap (0 1) on one wire\n"
    "  wireswap             exchange two wires\n"
    "  wireperm:i,j,...     wire permutation, wire k moves to position images[k]\n"
    "  rot3                 three-wire rotation (x1,x2,x3) -> (x2,x3,x1)\n"
    "  fredkin              controlled:1:wireswap\n"
    "  toffoli              controlled:11:not\n"
    "  rho                  controlled:0:rot3\n"
    "  identity:n           identity on n wires\n"
    "  table:n:c0,c1,...    explicit table over word codes of A^n\n"
    "  controlled:w:spec    spec applied when the leading wires read w (\"-\" is empty)\n";

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

unsigned to_unsigned(std::string_view text, std::string_view spec) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error("bad number '" + std::string(text) + "' in gate spec '" + std::string(spec) + "'");
  }
  return v;
}

std::vector<unsigned> numbers(std::string_view text, std::string_view spec) {
  std::vector<unsigned> out;
  for (auto part : split(text, ',')) out.push_back(to_unsigned(part, spec));
  return out;
}

std::vector<Word> words(unsigned q, std::string_view text) {
  std::vector<Word> out;
  for (auto part : split(text, ',')) out.push_back(Word::parse(q, part));
  return out;
}

}  // namespace

std::string spec_name(std::string_view spec) {
  std::string out;
  for (char c : spec) {
    if (c == ':') {
      out += '_';
    } else if (c == ',') {
      out += '.';
    } else {
      out += c;
    }
  }
  return out;
}

GateDef parse_gate_spec(unsigned q, std::string_view spec, std::string name) {
  if (name.empty()) name = spec_name(spec);
  const auto colon = spec.find(':');
  const auto head = spec.substr(0, colon);
  const auto rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  auto no_arg = [&] {
    if (has_arg) throw Error("gate spec '" + std::string(head) + "' takes no argument");
  };

  if (head == "swap" || head == "cycle") {
    const auto ws = words(q, rest);
    if (head == "swap" && ws.size() != 2) throw Error("swap needs exactly two words: " + std::string(spec));
    if (ws.size() < 2) throw Error("cycle needs at least two words: " + std::string(spec));
    return GateDef::table(name, GatePerm::word_cycle(ws));
  }
  if (head == "not") {
    no_arg();
    return GateDef::table(name, GatePerm::word_cycle({Word(q, {0}), Word(q, {1})}));
  }
  if (head == "wireswap") {
    no_arg();
    return GateDef::wire_perm(name, q, WirePermSpec({1, 0}));
  }
  if (head == "rot3") {
    no_arg();
    return GateDef::wire_perm(name, q, WirePermSpec({2, 0, 1}));
  }
  if (head == "wireperm") return GateDef::wire_perm(name, q, WirePermSpec(numbers(rest, spec)));
  if (head == "fredkin") {
    no_arg();
    return GateDef::controlled(name, Word(q, {1}), wire_perm(WirePermSpec({1, 0}), q));
  }
  if (head == "toffoli") {
    no_arg();
    return GateDef::controlled(name, Word(q, {1, 1}), GatePerm::word_cycle({Word(q, {0}), Word(q, {1})}));
  }
  if (head == "rho") {
    no_arg();
    return GateDef::controlled(name, Word(q, {0}), wire_perm(WirePermSpec({2, 0, 1}), q));
  }
  if (head == "identity") return GateDef::table(name, GatePerm::identity(q, to_unsigned(rest, spec)));
  if (head == "table") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) throw Error("table spec is table:n:c0,c1,...: " + std::string(spec));
    const auto codes = numbers(parts[1], spec);
    return GateDef::table(name, GatePerm(q, to_unsigned(parts[0], spec), std::vector<Code>(codes.begin(), codes.end())));
  }
  if (head == "controlled") {
    const auto next = rest.find(':');
    if (next == std::string_view::npos) throw Error("controlled spec is controlled:<word>:<spec>: " + std::string(spec));
    const Word w = Word::parse(q, rest.substr(0, next));
    const auto base = parse_gate_spec(q, rest.substr(next + 1), name);
    return GateDef::controlled(name, w, base.perm());
  }
  throw Error("unknown gate spec '" + std::string(spec) + "'");
}

GatePerm load_gate(unsigned q, const std::string& text) {
  const std::filesystem::path path(text);
  if (path.extension() == ".rg" && std::filesystem::exists(path)) return to_perm(load_circuit(path));
  return parse_gate_spec(q, text).perm();
}

}  // namespace revgate::cli
