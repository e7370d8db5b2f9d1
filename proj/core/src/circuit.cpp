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

#include "revgate/circuit.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "revgate/error.hpp"

namespace revgate {

namespace {

void check_name(const std::string& name) {
  if (name.empty()) throw Error("gate name is empty");
  for (char ch : name) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_' ||
                    ch == '-' || ch == '.' || ch == '\'';
    if (!ok) throw Error("invalid character in gate name '" + name + "'");
  }
}

std::string join_codes(std::span<const Code> codes, char sep) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(codes[i]);
  }
  return out;
}

std::string join_wires(const std::vector<unsigned>& wires, char sep) {
  std::string out;
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(wires[i]);
  }
  return out;
}

// Arity a with q^a == size, or 0.
unsigned arity_for(unsigned q, std::size_t size) {
  std::size_t p = 1;
  for (unsigned a = 0; a <= 24; ++a) {
    if (p == size) return a;
    if (p > size) break;
    p *= q;
  }
  return 0;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_number(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

GateDef GateDef::table(std::string name, GatePerm perm) {
  check_name(name);
  GateDef d;
  d.name_ = std::move(name);
  d.kind_ = Kind::Table;
  d.perm_ = std::move(perm);
  return d;
}

GateDef GateDef::controlled(std::string name, Word control, GatePerm base) {
  check_name(name);
  GateDef d;
  d.name_ = std::move(name);
  d.kind_ = Kind::Controlled;
  d.perm_ = revgate::controlled({control, base});
  d.control_ = std::move(control);
  d.base_ = std::move(base);
  return d;
}

GateDef GateDef::wire_perm(std::string name, unsigned q, WirePermSpec spec) {
  check_name(name);
  GateDef d;
  d.name_ = std::move(name);
  d.kind_ = Kind::WirePerm;
  d.perm_ = revgate::wire_perm(spec, q);
  d.wires_ = std::move(spec);
  return d;
}

GateDef GateDef::inverse(std::string name) const {
  switch (kind_) {
    case Kind::Table: return table(std::move(name), perm_.inverse());
    case Kind::Controlled: return controlled(std::move(name), control_, base_.inverse());
    case Kind::WirePerm: return wire_perm(std::move(name), q(), wires_.inverse());
  }
  throw Error("unknown gate kind");
}

GateDef GateDef::renamed(std::string name) const {
  check_name(name);
  GateDef d = *this;
  d.name_ = std::move(name);
  return d;
}

Circuit::Circuit(unsigned q, unsigned n) : q_(q), n_(n) {
  check_alphabet(q);
  if (n < 1) throw Error("circuits need at least one wire");
}

std::size_t Circuit::add_gate(GateDef def) {
  if (def.q() != q_) throw Error("gate '" + def.name() + "' has a different alphabet than the circuit");
  if (def.arity() > n_) throw Error("gate '" + def.name() + "' is wider than the circuit");
  if (auto i = find_gate(def.name())) {
    if (gates_[*i] == def) return *i;
    throw Error("duplicate gate name '" + def.name() + "'");
  }
  gates_.push_back(std::move(def));
  return gates_.size() - 1;
}

std::optional<std::size_t> Circuit::find_gate(std::string_view name) const {
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (gates_[i].name() == name) return i;
  }
  return std::nullopt;
}

void Circuit::apply(std::size_t gate, std::vector<unsigned> wires) {
  if (gate >= gates_.size()) throw Error("gate index out of range");
  const auto& def = gates_[gate];
  if (wires.size() != def.arity()) {
    throw Error("gate '" + def.name() + "' has arity " + std::to_string(def.arity()) + " but " +
                std::to_string(wires.size()) + " wires were given");
  }
  std::vector<bool> used(n_, false);
  for (unsigned w : wires) {
    if (w >= n_) throw Error("wire " + std::to_string(w) + " out of range for " + std::to_string(n_) + " wires");
    if (used[w]) throw Error("wire " + std::to_string(w) + " repeated");
    used[w] = true;
  }
  instances_.push_back({gate, std::move(wires)});
}

void Circuit::apply(std::string_view name, std::vector<unsigned> wires) {
  const auto i = find_gate(name);
  if (!i) throw Error("unknown gate '" + std::string(name) + "'");
  apply(*i, std::move(wires));
}

void Circuit::append(const Circuit& other) {
  if (other.q_ != q_ || other.n_ != n_) throw Error("cannot append a circuit of a different shape");
  std::vector<std::size_t> index(other.gates_.size());
  for (std::size_t i = 0; i < other.gates_.size(); ++i) {
    GateDef def = other.gates_[i];
    std::string name = def.name();
    for (int suffix = 2;; ++suffix) {
      const auto existing = find_gate(name);
      if (!existing || gates_[*existing] == def.renamed(name)) break;
      name = def.name() + "_" + std::to_string(suffix);
    }
    index[i] = add_gate(def.renamed(name));
  }
  for (const auto& inst : other.instances_) instances_.push_back({index[inst.gate], inst.wires});
}

Word simulate(const Circuit& c, const Word& w) {
  if (w.q() != c.q() || w.size() != c.arity()) throw Error("input word does not match the circuit");
  auto x = w.symbols();
  std::vector<Symbol> local;
  for (const auto& inst : c.instances()) {
    const auto& gate = c.gate_of(inst);
    local.resize(inst.wires.size());
    for (std::size_t i = 0; i < inst.wires.size(); ++i) local[i] = x[inst.wires[i]];
    const Code out = gate.perm()[word_encode(Word(c.q(), local))];
    const Word y = word_decode(out, gate.arity(), c.q());
    for (std::size_t i = 0; i < inst.wires.size(); ++i) x[inst.wires[i]] = y[i];
  }
  return Word(c.q(), std::move(x));
}

GatePerm to_perm(const Circuit& c) {
  const auto size = table_size(c.q(), c.arity());
  std::vector<Code> table(size);
  for (Code i = 0; i < size; ++i) table[i] = i;
  for (const auto& inst : c.instances()) {
    const GatePerm step = extend(c.gate_of(inst).perm(), c.arity(), inst.wires);
    for (auto& t : table) t = step[t];
  }
  return GatePerm(c.q(), c.arity(), std::move(table));
}

Circuit invert(const Circuit& c) {
  Circuit out(c.q(), c.arity());
  std::vector<std::size_t> index(c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const auto& g = c.gates()[i];
    if (g.perm().perm().is_involution()) {
      index[i] = out.add_gate(g);
    } else {
      std::string name = g.name() + "_inv";
      while (c.find_gate(name)) name += "_";
      index[i] = out.add_gate(g.inverse(name));
    }
  }
  for (auto it = c.instances().rbegin(); it != c.instances().rend(); ++it) out.apply(index[it->gate], it->wires);
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "revgate v1\n";
  out << "alphabet " << c.q() << "\n";
  out << "wires " << c.arity() << "\n";
  for (const auto& g : c.gates()) {
    out << "gate " << g.name() << ' ';
    switch (g.kind()) {
      case GateDef::Kind::Table:
        out << "table " << join_codes(g.perm().table(), ' ');
        break;
      case GateDef::Kind::Controlled:
        out << "controlled " << g.control().to_string() << " base " << join_codes(g.base().table(), ' ');
        break;
      case GateDef::Kind::WirePerm:
        out << "wireperm " << join_wires(g.wires().images(), ' ');
        break;
    }
    out << "\n";
  }
  for (const auto& inst : c.instances()) {
    out << "apply " << c.gate_of(inst).name() << ' ' << join_wires(inst.wires, ',') << "\n";
  }
  return out.str();
}

Circuit parse_circuit(std::string_view text) {
  std::optional<unsigned> q;
  std::optional<unsigned> n;
  std::optional<Circuit> circuit;
  bool header = false;
  std::size_t line_no = 0;
  for (std::string_view rest = text; !rest.empty() || line_no == 0;) {
    const auto eol = rest.find('\n');
    std::string_view line = rest.substr(0, eol);
    rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) {
      if (rest.empty()) break;
      continue;
    }
    try {
      if (!header) {
        if (tok.size() != 2 || tok[0] != "revgate" || tok[1] != "v1") {
          throw ParseError(line_no, "expected header 'revgate v1'");
        }
        header = true;
      } else if (tok[0] == "alphabet") {
        if (tok.size() != 2 || q) throw ParseError(line_no, "expected a single 'alphabet <q>' line");
        q = static_cast<unsigned>(parse_number(tok[1], line_no, "alphabet size"));
        check_alphabet(*q);
      } else if (tok[0] == "wires") {
        if (tok.size() != 2 || n) throw ParseError(line_no, "expected a single 'wires <n>' line");
        if (!q) throw ParseError(line_no, "'alphabet' must come before 'wires'");
        n = static_cast<unsigned>(parse_number(tok[1], line_no, "wire count"));
        circuit.emplace(*q, *n);
      } else if (tok[0] == "gate") {
        if (!circuit) throw ParseError(line_no, "'alphabet' and 'wires' must come before gates");
        if (tok.size() < 3) throw ParseError(line_no, "incomplete gate definition");
        const std::string name(tok[1]);
        if (circuit->find_gate(name)) throw ParseError(line_no, "duplicate gate name '" + name + "'");
        auto codes = [&](std::size_t from) {
          std::vector<Code> out;
          for (std::size_t i = from; i < tok.size(); ++i) {
            out.push_back(static_cast<Code>(parse_number(tok[i], line_no, "code")));
          }
          return out;
        };
        auto table_gate = [&](std::vector<Code> t) {
          const unsigned a = arity_for(*q, t.size());
          if (a == 0) throw ParseError(line_no, "table length " + std::to_string(t.size()) + " is not a power of q");
          return GatePerm(*q, a, std::move(t));
        };
        if (tok[2] == "table") {
          circuit->add_gate(GateDef::table(name, table_gate(codes(3))));
        } else if (tok[2] == "controlled") {
          if (tok.size() < 6 || tok[4] != "base") throw ParseError(line_no, "expected 'controlled <word> base <codes>'");
          circuit->add_gate(GateDef::controlled(name, Word::parse(*q, tok[3]), table_gate(codes(5))));
        } else if (tok[2] == "wireperm") {
          const auto images = codes(3);
          circuit->add_gate(GateDef::wire_perm(name, *q, WirePermSpec(std::vector<unsigned>(images.begin(), images.end()))));
        } else {
          throw ParseError(line_no, "unknown gate kind '" + std::string(tok[2]) + "'");
        }
      } else if (tok[0] == "apply") {
        if (!circuit) throw ParseError(line_no, "'alphabet' and 'wires' must come before apply");
        if (tok.size() != 3) throw ParseError(line_no, "expected 'apply <name> <w,w,...>'");
        std::vector<unsigned> wires;
        for (auto part : split(tok[2], ',')) wires.push_back(static_cast<unsigned>(parse_number(part, line_no, "wire")));
        circuit->apply(tok[1], std::move(wires));
      } else {
        throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (rest.empty()) break;
  }
  if (!header) throw ParseError(line_no, "missing header 'revgate v1'");
  if (!circuit) throw ParseError(line_no, "missing 'alphabet' or 'wires'");
  return *circuit;
}

Circuit load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit(buffer.str());
}

void save_circuit(const Circuit& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize(c);
}

}  // namespace revgate
