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

#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "gate_spec.hpp"
#include "revgate/algebra.hpp"
#include "revgate/circuit.hpp"
#include "revgate/claims.hpp"
#include "revgate/constructions.hpp"
#include "revgate/error.hpp"
#include "revgate/generation.hpp"
#include "revgate/hypergraphs.hpp"
#include "revgate/parity.hpp"
#include "revgate/search.hpp"

namespace revgate::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = ClaimOptions{}.seed;
  unsigned workers = 1;
};

struct Report {
  std::string subcommand;
  Json inputs = Json::object();
  std::string status = "ok";
  Json result = Json::object();
  Json timing = Json::object();
  std::ostringstream text;
  int code = kOk;
};

std::size_t parse_bytes(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad memory size '" + text + "'");
  }
  const std::string unit = text.substr(pos);
  if (unit.empty() || unit == "B") return v;
  if (unit == "K" || unit == "KB") return v << 10;
  if (unit == "M" || unit == "MB") return v << 20;
  if (unit == "G" || unit == "GB") return v << 30;
  throw UsageError("bad memory size '" + text + "' (use a byte count or a K/M/G suffix)");
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void write_circuit(const Circuit& c, const std::string& output, Report& r) {
  const auto text = serialize(c);
  r.result["circuit"] = text;
  if (!output.empty()) {
    save_circuit(c, output);
    r.text << "wrote " << output << " (" << c.size() << " gates)\n";
  } else {
    r.text << text;
  }
}

// --- components ------------------------------------------------------------

struct ComponentsArgs {
  std::string kind;
  unsigned q = 2;
  unsigned n = 0;
};

void cmd_components(const ComponentsArgs& a, Report& r) {
  r.inputs = {{"kind", a.kind}, {"q", a.q}, {"n", a.n}};
  const auto kind = parse_graph_kind(a.kind);
  const auto parts = components(kind, a.q, a.n);
  const auto sizes = parts.sizes();
  std::vector<std::string> reps;
  for (const auto& cls : parts.classes()) reps.push_back(word_decode(cls.front(), a.n, a.q).to_string());
  r.result = {{"count", parts.count()}, {"sizes", sizes}, {"representatives", reps}};
  r.text << to_string(kind) << " q=" << a.q << " n=" << a.n << ": " << parts.count() << " components\n";
  for (std::size_t i = 0; i < parts.count(); ++i) r.text << "  " << reps[i] << "  size " << sizes[i] << "\n";
}

// --- verify-generation -----------------------------------------------------

struct GenerationArgs {
  std::string family;
  std::string target;
  unsigned q = 2;
  unsigned n = 0;
  unsigned k = 0;
};

void cmd_verify_generation(const GenerationArgs& a, Report& r) {
  r.inputs = {{"family", a.family}, {"class", a.target}, {"q", a.q}, {"n", a.n}, {"k", a.k}};
  const auto family = parse_family(a.family);
  const auto target = parse_target_class(a.target, a.k);
  const auto gens = controlled_instance_perms(family, a.q, a.n, a.k);
  r.result["generators"] = gens.size();
  try {
    const auto rep = check_generation(a.q, a.n, gens, target);
    r.status = rep.generates ? "PASS" : "FAIL";
    r.code = rep.generates ? kOk : kFail;
    r.result["order"] = to_string(rep.order);
    r.result["target_order"] = to_string(rep.target);
    r.text << r.status << ": " << gens.size() << " controlled " << to_string(family) << " gates on " << a.n
           << " wires, q=" << a.q << "\n  order  " << to_string(rep.order) << "\n  target " << to_string(rep.target)
           << " (" << target.name << ")\n";
  } catch (const ClassMembershipError& e) {
    r.status = "FAIL";
    r.code = kFail;
    r.result["error"] = e.what();
    r.text << "FAIL: " << e.what() << "\n";
  }
}

// --- parity-seq ------------------------------------------------------------

struct ParityArgs {
  std::string circuit;
  std::vector<std::string> gens;
  unsigned q = 2;
  unsigned n = 0;
};

void cmd_parity_seq(const ParityArgs& a, Report& r) {
  if (a.circuit.empty() == a.gens.empty()) throw UsageError("parity-seq needs exactly one of --circuit or --gens");
  std::vector<std::pair<std::string, GatePerm>> gates;
  unsigned q = a.q;
  unsigned n = a.n;
  if (!a.circuit.empty()) {
    r.inputs = {{"circuit", a.circuit}};
    const auto c = load_circuit(a.circuit);
    q = c.q();
    if (n == 0) n = c.arity();
    gates.emplace_back(a.circuit, to_perm(c));
  } else {
    r.inputs = {{"gens", a.gens}, {"q", a.q}, {"n", a.n}};
    if (n == 0) throw UsageError("--gens needs --n");
    for (const auto& spec : a.gens) gates.emplace_back(spec, parse_gate_spec(q, spec).perm());
  }
  Json seqs = Json::array();
  std::vector<GatePerm> perms;
  for (const auto& [name, g] : gates) {
    if (!is_conservative(g)) {
      r.status = "FAIL";
      r.code = kFail;
      r.result["error"] = name + " is not conservative";
      r.text << "FAIL: " << name << " is not conservative\n";
      return;
    }
    const auto seq = parity_sequence(g);
    seqs.push_back({{"gate", name}, {"arity", g.arity()}, {"sequence", seq.to_string()}});
    r.text << name << " (arity " << g.arity() << "): " << seq.to_string() << "\n";
    perms.push_back(g);
  }
  const auto span = parity_span(q, perms, n);
  std::vector<std::string> basis;
  for (const auto& b : span.basis()) basis.push_back(b.to_string());
  r.result["sequences"] = seqs;
  r.result["span"] = {{"n", n}, {"rank", span.rank()}, {"size", to_string(span.size())}, {"basis", basis}};
  r.text << "span of extensions to " << n << " wires: rank " << span.rank() << ", size " << to_string(span.size())
         << "\n";
  for (const auto& b : basis) r.text << "  " << b << "\n";
  if (q == 2) {
    const auto f = find_unreachable_conservative(q, perms, n);
    if (f) {
      std::vector<std::string> moved;
      for (Code c = 0; c < f->size(); ++c) {
        if ((*f)[c] != c) moved.push_back(word_decode(c, n, q).to_string());
      }
      r.result["unreachable_swap"] = moved;
      r.text << "unreachable conservative swap: (" << join(moved, " ") << ")\n";
    } else {
      r.result["unreachable_swap"] = nullptr;
    }
  }
}

// --- decompose -------------------------------------------------------------

struct DecomposeArgs {
  std::string target;
  std::vector<std::string> bases;
  unsigned q = 2;
  unsigned n = 0;
  std::string algo = "mitm";
  unsigned max_depth = 0;
  std::string mem_budget = "2G";
  bool no_prune = false;
  std::string output;
};

void cmd_decompose(const DecomposeArgs& a, const Globals& g, Report& r) {
  r.inputs = {{"target", a.target}, {"base", a.bases},           {"q", a.q},
              {"n", a.n},           {"algo", a.algo},            {"max_depth", a.max_depth},
              {"mem_budget", a.mem_budget}, {"prune_inverse", !a.no_prune}, {"workers", g.workers}};
  const auto target = load_gate(a.q, a.target);
  if (target.arity() != a.n) {
    throw UsageError("target has arity " + std::to_string(target.arity()) + ", expected --n " + std::to_string(a.n));
  }
  std::vector<GateDef> defs;
  for (const auto& spec : a.bases) defs.push_back(parse_gate_spec(target.q(), spec));
  const InstanceSet set(defs, a.n);
  SearchOptions opt;
  opt.memory_budget = parse_bytes(a.mem_budget);
  opt.workers = g.workers;
  opt.prune_inverse = !a.no_prune;
  const auto res = a.algo == "bfs" ? bfs_min(target, set, a.max_depth, opt) : mitm_min(target, set, a.max_depth, opt);
  r.result["instances"] = set.size();
  r.result["stats"] = {{"nodes", res.stats.nodes}, {"stored_states", res.stats.stored_states},
                       {"stored_bytes", res.stats.stored_bytes}};
  r.timing["search_seconds"] = res.stats.seconds;
  if (res.found()) {
    r.status = "found";
    r.result["depth"] = res.depth;
    r.result["word"] = res.word;
    r.text << "# found at depth " << res.depth << ", nothing shorter\n";
    write_circuit(*res.circuit, a.output, r);
  } else {
    r.status = "exhausted";
    r.code = kFail;
    r.result["exhausted_to_depth"] = res.depth;
    r.text << "no circuit of length <= " << res.depth << " over " << set.size() << " instances\n";
  }
}

// --- lift, synthesize, simulate ----------------------------------------------

struct LiftArgs {
  std::string circuit;
  std::string prefix;
  std::string output;
};

void cmd_lift(const LiftArgs& a, Report& r) {
  r.inputs = {{"circuit", a.circuit}, {"prefix", a.prefix}};
  const auto c = load_circuit(a.circuit);
  const auto lifted = lift_control(c, Word::parse(c.q(), a.prefix));
  r.result["gates"] = lifted.size();
  r.result["wires"] = lifted.arity();
  write_circuit(lifted, a.output, r);
}

struct SynthesizeArgs {
  std::string target;
  std::string basis;
  std::string target_class;
  unsigned q = 2;
  unsigned k = 0;
  std::string output;
};

std::string default_class(Family f) {
  switch (f) {
    case Family::P1: return "full";
    case Family::P2: return "cons";
    case Family::P3: return "alt";
    case Family::P4: return "altcons";
    case Family::P2K: return "modk";
  }
  return "full";
}

void cmd_synthesize(const SynthesizeArgs& a, Report& r) {
  const auto basis = parse_family(a.basis);
  const std::string cls = a.target_class.empty() ? default_class(basis) : a.target_class;
  r.inputs = {{"target", a.target}, {"basis", a.basis}, {"class", cls}, {"q", a.q}, {"k", a.k}};
  const auto target = load_gate(a.q, a.target);
  try {
    const auto c = synthesize(target, parse_target_class(cls, a.k), basis, a.k);
    const bool ok = to_perm(c) == target;
    r.status = ok ? "PASS" : "FAIL";
    r.code = ok ? kOk : kFail;
    r.result["gates"] = c.size();
    r.result["verified"] = ok;
    write_circuit(c, a.output, r);
  } catch (const ClassMembershipError& e) {
    r.status = "FAIL";
    r.code = kFail;
    r.result["error"] = e.what();
    r.text << "FAIL: " << e.what() << "\n";
  }
}

struct SimulateArgs {
  std::string circuit;
  std::string input;
};

void cmd_simulate(const SimulateArgs& a, Report& r) {
  r.inputs = {{"circuit", a.circuit}, {"input", a.input}};
  const auto c = load_circuit(a.circuit);
  const auto out = simulate(c, Word::parse(c.q(), a.input));
  r.result["output"] = out.to_string();
  r.text << out.to_string() << "\n";
}

// --- check-paper -------------------------------------------------------------

struct CheckArgs {
  std::string suite = "quick";
  std::string mem_budget = "4G";
};

void cmd_check_paper(const CheckArgs& a, const Globals& g, Report& r, std::ostream& live) {
  ClaimOptions opt;
  opt.suite = parse_suite(a.suite);
  opt.seed = g.seed;
  opt.workers = g.workers;
  opt.memory_budget = parse_bytes(a.mem_budget);
  r.inputs = {{"suite", a.suite}, {"seed", g.seed}, {"mem_budget", a.mem_budget}, {"workers", g.workers}};
  Json rows = Json::array();
  Json times = Json::object();
  int failed = 0;
  run_claims(opt, [&](const ClaimResult& c) {
    rows.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"details", c.details}});
    times[std::to_string(c.id)] = c.seconds;
    failed += !c.pass;
    if (!g.json) {
      live << (c.pass ? "PASS" : "FAIL") << "  " << c.id << (c.id < 10 ? "   " : "  ") << c.title << "\n";
      for (const auto& d : c.details) live << "          " << d << "\n";
      live.flush();
    }
  });
  r.result["criteria"] = rows;
  r.result["failed"] = failed;
  r.timing["criteria_seconds"] = times;
  r.status = failed == 0 ? "PASS" : "FAIL";
  r.code = failed == 0 ? kOk : kFail;
  r.text << kClaimCount - failed << "/" << kClaimCount << " criteria passed\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible gates over finite alphabets: generation checks, searches and circuits.", "revgate"};
  app.require_subcommand(1, 1);
  app.footer(kGateSpecHelp);

  Globals g;
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads for searches")->check(CLI::PositiveNumber);

  const auto kinds = CLI::IsMember({"G1", "G2", "G3", "G4"});
  const auto families = CLI::IsMember({"P1", "P2", "P3", "P4", "P2K"});
  const auto classes = CLI::IsMember({"full", "alt", "cons", "altcons", "modk"});

  ComponentsArgs comp;
  auto* s_comp = app.add_subcommand("components", "Connected components of a word graph");
  s_comp->add_option("--kind", comp.kind, "G1|G2|G3|G4")->required()->check(kinds);
  s_comp->add_option("--q", comp.q, "Alphabet size")->capture_default_str()->check(CLI::Range(2, 255));
  s_comp->add_option("--n", comp.n, "Word length")->required()->check(CLI::Range(1, 24));

  GenerationArgs gen;
  auto* s_gen = app.add_subcommand("verify-generation", "Do the controlled family gates generate the class?");
  s_gen->add_option("--family", gen.family, "P1|P2|P3|P4|P2K")->required()->check(families);
  s_gen->add_option("--class", gen.target, "full|alt|cons|altcons|modk")->required()->check(classes);
  s_gen->add_option("--q", gen.q, "Alphabet size")->capture_default_str()->check(CLI::Range(2, 255));
  s_gen->add_option("--n", gen.n, "Wires")->required()->check(CLI::Range(1, 24));
  s_gen->add_option("--k", gen.k, "Modulus for modk and P2K")->capture_default_str();

  ParityArgs par;
  auto* s_par = app.add_subcommand("parity-seq", "Parity sequences and their span");
  s_par->add_option("--circuit", par.circuit, "Circuit file (.rg)");
  s_par->add_option("--gens", par.gens, "Gate specs")->expected(1, -1);
  s_par->add_option("--q", par.q, "Alphabet size for --gens")->capture_default_str()->check(CLI::Range(2, 255));
  s_par->add_option("--n", par.n, "Wires for the span (default: circuit width)");

  DecomposeArgs dec;
  auto* s_dec = app.add_subcommand("decompose", "Shortest circuit over the placements of base gates");
  s_dec->add_option("--target", dec.target, "Gate spec or .rg file")->required();
  s_dec->add_option("--base", dec.bases, "Base gate specs")->required()->expected(1, -1);
  s_dec->add_option("--q", dec.q, "Alphabet size")->capture_default_str()->check(CLI::Range(2, 255));
  s_dec->add_option("--n", dec.n, "Wires")->required()->check(CLI::Range(1, 24));
  s_dec->add_option("--algo", dec.algo, "bfs|mitm")->capture_default_str()->check(CLI::IsMember({"bfs", "mitm"}));
  s_dec->add_option("--max-depth", dec.max_depth, "Longest circuit to try")->required();
  s_dec->add_option("--mem-budget", dec.mem_budget, "Memory cap, e.g. 512M or 4G")->capture_default_str();
  s_dec->add_flag("--no-prune", dec.no_prune, "Keep words with a letter next to its inverse");
  s_dec->add_option("--output", dec.output, "Write the circuit here instead of stdout");

  LiftArgs lift;
  auto* s_lift = app.add_subcommand("lift", "Prefix every gate's control word");
  s_lift->add_option("--circuit", lift.circuit, "Circuit file (.rg)")->required();
  s_lift->add_option("--prefix", lift.prefix, "Control word to prepend")->required();
  s_lift->add_option("--output", lift.output, "Write the circuit here instead of stdout");

  SynthesizeArgs syn;
  auto* s_syn = app.add_subcommand("synthesize", "Circuit over controlled family gates for a target");
  s_syn->add_option("--target", syn.target, "Gate spec or .rg file")->required();
  s_syn->add_option("--basis", syn.basis, "P1|P2|P3|P4|P2K")->required()->check(families);
  s_syn->add_option("--class", syn.target_class, "Target class (default from basis)")->check(classes);
  s_syn->add_option("--q", syn.q, "Alphabet size for specs")->capture_default_str()->check(CLI::Range(2, 255));
  s_syn->add_option("--k", syn.k, "Modulus for modk and P2K")->capture_default_str();
  s_syn->add_option("--output", syn.output, "Write the circuit here instead of stdout");

  SimulateArgs sim;
  auto* s_sim = app.add_subcommand("simulate", "Run a circuit on one input word");
  s_sim->add_option("--circuit", sim.circuit, "Circuit file (.rg)")->required();
  s_sim->add_option("--input", sim.input, "Input word")->required();

  CheckArgs chk;
  auto* s_chk = app.add_subcommand("check-paper", "Run the acceptance grid");
  s_chk->add_option("--suite", chk.suite, "quick|full")->capture_default_str()->check(CLI::IsMember({"quick", "full"}));
  s_chk->add_option("--mem-budget", chk.mem_budget, "Memory cap for searches")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Report r;
  r.subcommand = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    if (s_comp->parsed()) cmd_components(comp, r);
    if (s_gen->parsed()) cmd_verify_generation(gen, r);
    if (s_par->parsed()) cmd_parity_seq(par, r);
    if (s_dec->parsed()) cmd_decompose(dec, g, r);
    if (s_lift->parsed()) cmd_lift(lift, r);
    if (s_syn->parsed()) cmd_synthesize(syn, r);
    if (s_sim->parsed()) cmd_simulate(sim, r);
    if (s_chk->parsed()) cmd_check_paper(chk, g, r, out);
  } catch (const ResourceError& e) {
    r.status = "resource";
    r.code = kResource;
    r.result = {{"error", e.what()}};
  } catch (const std::exception& e) {
    r.status = "error";
    r.code = kUsage;
    r.result = {{"error", e.what()}};
  }
  r.timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (g.json) {
    const Json report = {{"tool", "revgate"}, {"subcommand", r.subcommand}, {"inputs", r.inputs},
                         {"status", r.status}, {"result", r.result},         {"timing", r.timing}};
    out << report.dump(2) << "\n";
  } else if (r.status == "resource" || r.status == "error") {
    err << "revgate " << r.subcommand << ": " << r.result["error"].get<std::string>() << "\n";
  } else {
    out << r.text.str();
  }
  return r.code;
}

}  // namespace revgate::cli
