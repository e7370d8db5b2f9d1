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

#include "revgate/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "revgate/error.hpp"

namespace revgate {

namespace {

void to_digits(Code code, unsigned q, std::vector<Symbol>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = code % q;
    code /= q;
  }
}

Code from_digits(const std::vector<Symbol>& digits, unsigned q) {
  Code code = 0;
  for (Symbol s : digits) code = code * q + s;
  return code;
}

void require_same_alphabet(const GatePerm& f, const GatePerm& g) {
  if (f.q() != g.q()) throw Error("alphabet mismatch: " + std::to_string(f.q()) + " vs " + std::to_string(g.q()));
}

}  // namespace

WirePermSpec::WirePermSpec(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i : images_) {
    if (i >= images_.size() || seen[i]) throw Error("wire permutation is not a bijection");
    seen[i] = true;
  }
}

WirePermSpec WirePermSpec::identity(unsigned n) {
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  return WirePermSpec(std::move(img));
}

WirePermSpec WirePermSpec::from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<std::vector<Permutation::Point>> c;
  for (const auto& cycle : cycles) c.emplace_back(cycle.begin(), cycle.end());
  const auto p = Permutation::from_cycles(n, c);
  return WirePermSpec(std::vector<unsigned>(p.images().begin(), p.images().end()));
}

WirePermSpec WirePermSpec::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return WirePermSpec(std::move(inv));
}

WirePermSpec compose_lr(const WirePermSpec& alpha, const WirePermSpec& beta) {
  if (alpha.arity() != beta.arity()) throw Error("wire permutation arity mismatch");
  std::vector<unsigned> img(alpha.arity());
  for (unsigned i = 0; i < img.size(); ++i) img[i] = beta(alpha(i));
  return WirePermSpec(std::move(img));
}

GatePerm wire_perm(const WirePermSpec& spec, unsigned q) {
  const unsigned n = spec.arity();
  const auto size = table_size(q, n);
  std::vector<Code> table(size);
  std::vector<Symbol> x(n), y(n);
  for (Code c = 0; c < size; ++c) {
    to_digits(c, q, x);
    for (unsigned i = 0; i < n; ++i) y[spec(i)] = x[i];
    table[c] = from_digits(y, q);
  }
  return GatePerm(q, n, std::move(table));
}

GatePerm compose_lr(const GatePerm& first, const GatePerm& then) {
  require_same_alphabet(first, then);
  if (first.arity() != then.arity()) throw Error("arity mismatch in composition");
  return GatePerm(first.q(), first.arity(), compose_lr(first.perm(), then.perm()));
}

GatePerm inverse(const GatePerm& f) { return f.inverse(); }

GatePerm parallel(const GatePerm& f, const GatePerm& g) {
  require_same_alphabet(f, g);
  const auto gsize = static_cast<Code>(g.size());
  const auto size = table_size(f.q(), f.arity() + g.arity());
  std::vector<Code> table(size);
  for (Code c = 0; c < size; ++c) table[c] = f[c / gsize] * gsize + g[c % gsize];
  return GatePerm(f.q(), f.arity() + g.arity(), std::move(table));
}

GatePerm extend(const GatePerm& f, unsigned n, const std::vector<unsigned>& positions) {
  const unsigned l = f.arity();
  if (positions.size() != l) throw Error("extend: expected " + std::to_string(l) + " positions");
  std::vector<bool> used(n, false);
  for (unsigned p : positions) {
    if (p >= n) throw Error("extend: position " + std::to_string(p) + " out of range for arity " + std::to_string(n));
    if (used[p]) throw Error("extend: repeated position " + std::to_string(p));
    used[p] = true;
  }
  const unsigned q = f.q();
  const auto size = table_size(q, n);
  std::vector<Code> table(size);
  std::vector<Symbol> x(n), sub(l);
  for (Code c = 0; c < size; ++c) {
    to_digits(c, q, x);
    for (unsigned i = 0; i < l; ++i) sub[i] = x[positions[i]];
    to_digits(f[from_digits(sub, q)], q, sub);
    for (unsigned i = 0; i < l; ++i) x[positions[i]] = sub[i];
    table[c] = from_digits(x, q);
  }
  return GatePerm(q, n, std::move(table));
}

std::vector<GatePerm> extensions(const std::vector<GatePerm>& gates, unsigned n) {
  std::set<GatePerm> seen;
  std::vector<GatePerm> out;
  for (const auto& g : gates) {
    const unsigned a = g.arity();
    if (a > n) throw Error("gate of arity " + std::to_string(a) + " does not fit on " + std::to_string(n) + " wires");
    std::vector<unsigned> wires(a);
    std::vector<bool> used(n, false);
    auto visit = [&](auto&& self, unsigned pos) -> void {
      if (pos == a) {
        GatePerm e = extend(g, n, wires);
        if (seen.insert(e).second) out.push_back(std::move(e));
        return;
      }
      for (unsigned w = 0; w < n; ++w) {
        if (used[w]) continue;
        used[w] = true;
        wires[pos] = w;
        self(self, pos + 1);
        used[w] = false;
      }
    };
    visit(visit, 0);
  }
  return out;
}

GatePerm gencomp(const GatePerm& f, const GatePerm& g, unsigned k) {
  require_same_alphabet(f, g);
  const unsigned n = f.arity(), m = g.arity();
  if (k > std::min(n, m)) throw Error("gencomp: k = " + std::to_string(k) + " exceeds min(arity f, arity g)");
  const unsigned q = f.q();
  const unsigned arity = n + m - k;
  const auto size = table_size(q, arity);
  std::vector<Code> table(size);
  std::vector<Symbol> x(arity), y(n), z(m), out(arity);
  for (Code c = 0; c < size; ++c) {
    to_digits(c, q, x);
    to_digits(f[from_digits(std::vector<Symbol>(x.begin(), x.begin() + n), q)], q, y);
    for (unsigned i = 0; i < k; ++i) z[i] = y[i];
    for (unsigned i = k; i < m; ++i) z[i] = x[n + (i - k)];
    to_digits(g[from_digits(z, q)], q, z);
    for (unsigned i = 0; i < m; ++i) out[i] = z[i];
    for (unsigned i = k; i < n; ++i) out[m + (i - k)] = y[i];
    table[c] = from_digits(out, q);
  }
  return GatePerm(q, arity, std::move(table));
}

GatePerm rewire(const GatePerm& f, const WirePermSpec& alpha) {
  if (alpha.arity() != f.arity()) throw Error("rewire: arity mismatch");
  const GatePerm p = wire_perm(alpha, f.q());
  return compose_lr(compose_lr(p, f), p.inverse());
}

GatePerm controlled(const ControlledSpec& spec) {
  const GatePerm& base = spec.base;
  if (spec.control.q() != base.q()) throw Error("control word and base gate use different alphabets");
  const auto k = static_cast<unsigned>(spec.control.size());
  if (k == 0) return base;
  const unsigned q = base.q();
  const auto bsize = static_cast<Code>(base.size());
  const Code w = word_encode(spec.control);
  const auto size = table_size(q, k + base.arity());
  std::vector<Code> table(size);
  for (Code c = 0; c < size; ++c) table[c] = (c / bsize == w) ? w * bsize + base[c % bsize] : c;
  return GatePerm(q, k + base.arity(), std::move(table));
}

Family parse_family(const std::string& name) {
  if (name == "P1") return Family::P1;
  if (name == "P2") return Family::P2;
  if (name == "P3") return Family::P3;
  if (name == "P4") return Family::P4;
  if (name == "P2K") return Family::P2K;
  throw Error("unknown gate family '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::P1: return "P1";
    case Family::P2: return "P2";
    case Family::P3: return "P3";
    case Family::P4: return "P4";
    case Family::P2K: return "P2K";
  }
  return "?";
}

std::vector<GatePerm> family_bases(Family family, unsigned q, unsigned k) {
  check_alphabet(q);
  std::set<GatePerm> bases;
  auto w = [q](std::vector<Symbol> s) { return Word(q, std::move(s)); };
  switch (family) {
    case Family::P1:
      for (Symbol a = 0; a < q; ++a)
        for (Symbol b = a + 1; b < q; ++b) bases.insert(GatePerm::word_cycle({w({a}), w({b})}));
      break;
    case Family::P2K:
      if (k < 1) throw Error("P2K needs k >= 1");
      for (Symbol a = 0; a < q; ++a)
        for (Symbol b = a + 1; b < q; ++b)
          bases.insert(GatePerm::word_cycle({w(std::vector<Symbol>(k, a)), w(std::vector<Symbol>(k, b))}));
      [[fallthrough]];
    case Family::P2:
      for (Symbol a = 0; a < q; ++a)
        for (Symbol b = a + 1; b < q; ++b) bases.insert(GatePerm::word_cycle({w({a, b}), w({b, a})}));
      break;
    case Family::P3:
      for (Symbol a = 0; a < q; ++a)
        for (Symbol b = 0; b < q; ++b)
          for (Symbol c = 0; c < q; ++c)
            for (Symbol d = 0; d < q; ++d) {
              if (a == d || b == c) continue;
              bases.insert(GatePerm::word_cycle({w({a, b}), w({a, c}), w({d, b})}));
            }
      break;
    case Family::P4:
      for (Symbol a = 0; a < q; ++a)
        for (Symbol b = 0; b < q; ++b)
          for (Symbol c = 0; c < q; ++c) {
            if (a == b && b == c) continue;
            bases.insert(GatePerm::word_cycle({w({a, b, c}), w({b, c, a}), w({c, a, b})}));
          }
      break;
  }
  return {bases.begin(), bases.end()};
}

std::vector<ControlledInstance> controlled_instances(Family family, unsigned q, unsigned n, unsigned k) {
  const auto bases = family_bases(family, q, k);
  for (const auto& base : bases) {
    if (base.arity() > n) {
      throw Error("family " + to_string(family) + " has gates of arity " + std::to_string(base.arity()) +
                  " > n = " + std::to_string(n));
    }
  }
  std::vector<ControlledInstance> all;
  std::vector<unsigned> wires(n);
  for (const auto& base : bases) {
    const unsigned controls = n - base.arity();
    const auto words = table_size(q, controls);
    for (Code wc = 0; wc < words; ++wc) {
      const Word w = controls ? word_decode(wc, controls, q) : Word(q, {});
      const GatePerm gate = controlled({w, base});
      std::iota(wires.begin(), wires.end(), 0u);
      do {
        all.push_back({w, base, wires, extend(gate, n, wires)});
      } while (std::next_permutation(wires.begin(), wires.end()));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const ControlledInstance& a, const ControlledInstance& b) {
    const Code ca = a.control.empty() ? 0 : word_encode(a.control);
    const Code cb = b.control.empty() ? 0 : word_encode(b.control);
    return std::tie(ca, a.base, a.wires) < std::tie(cb, b.base, b.wires);
  });
  std::set<GatePerm> seen;
  std::vector<ControlledInstance> out;
  for (auto& inst : all) {
    if (seen.insert(inst.perm).second) out.push_back(std::move(inst));
  }
  return out;
}

std::vector<GatePerm> controlled_instance_perms(Family family, unsigned q, unsigned n, unsigned k) {
  std::vector<GatePerm> out;
  for (auto& inst : controlled_instances(family, q, n, k)) out.push_back(std::move(inst.perm));
  return out;
}

}  // namespace revgate
