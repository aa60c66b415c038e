/*
Copyright 2026 The pebblemp Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
// Batch front end. Reports are key=value lines in a fixed order.
// Exit status: 0 ok, 1 semantic failure, 2 usage or parse failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pebble/bounds.hpp"
#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/oracles.hpp"
#include "pebble/solver.hpp"
#include "pebble/strategies.hpp"
#include "pebble/towers.hpp"
#include "pebble/trace.hpp"

using namespace pebble;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Thrown for unreadable input files; maps to the usage exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::uint64_t default_seed() {
  if (const char *s = std::getenv("PEBBLE_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception &) {
      throw InputError("PEBBLE_SEED is not an unsigned integer");
    }
  }
  return 1;
}

struct InstanceFlags {
  int k = 1;
  std::int64_t r = 2;
  std::int64_t g = 1;
  std::string variant = "mpp";
  std::string terminal = "any";

  void attach(CLI::App *app) {
    app->add_option("--k", k, "processors")->check(CLI::Range(1, 64));
    app->add_option("--r", r, "red pebbles per processor")->check(CLI::PositiveNumber);
    app->add_option("--g", g, "I/O cost")->check(CLI::NonNegativeNumber);
    app->add_option("--variant", variant, "mpp | one-shot | no-delete | direct-send");
    app->add_option("--terminal", terminal, "any | blue");
  }
  ProblemInstance get() const {
    ProblemInstance i;
    i.k = k;
    i.r = r;
    i.g = g;
    i.variant = parse_variant(variant);
    i.terminal = parse_terminal_mode(terminal);
    return i;
  }
};

void print_instance(const ProblemInstance &i) {
  std::cout << "instance.k=" << i.k << "\ninstance.r=" << i.r << "\ninstance.g=" << i.g
            << "\ninstance.variant=" << to_string(i.variant) << "\ninstance.terminal=" << to_string(i.terminal)
            << "\n";
}

void print_stats(const CompDag &d) {
  DagStats s = d.stats();
  std::cout << "dag.n=" << s.n << "\ndag.m=" << s.m << "\ndag.max_in_degree=" << s.max_in_degree
            << "\ndag.sources=" << s.source_count << "\ndag.sinks=" << s.sink_count
            << "\ndag.longest_path=" << s.longest_path << "\n";
}

void print_cost(const std::string &prefix, const CostBreakdown &c) {
  std::cout << prefix << "total=" << c.total << "\n"
            << prefix << "compute_cost=" << c.compute_cost << "\n"
            << prefix << "io_cost=" << c.io_cost << "\n"
            << prefix << "compute_steps=" << c.compute_step_count << "\n"
            << prefix << "io_steps=" << c.io_step_count << "\n"
            << prefix << "recomputes=" << c.recompute_count << "\n"
            << prefix << "surplus=" << to_string(c.surplus) << "\n";
}

// Checks n/k <= total <= (g(max_in+1)+1) n and prints the verdict.
bool print_sandwich(const ProblemInstance &i, const CompDag &d, std::int64_t total) {
  BoundResult b = trivial_bounds(static_cast<std::int64_t>(d.n()), i.k, i.r, i.g,
                                 static_cast<std::int64_t>(d.max_in_degree()));
  bool ok = Rational(total) >= b.lower && Rational(total) <= *b.upper;
  std::cout << "bounds.lower=" << to_string(b.lower) << "\nbounds.upper=" << to_string(*b.upper)
            << "\ncheck.sandwich=" << (ok ? "pass" : "fail") << "\n";
  return ok;
}

bool report_validation(const ProblemInstance &i, const CompDag &d, const Strategy &s, const std::string &prefix) {
  ValidationReport rep = validate_strategy(i, d, s);
  std::cout << prefix << "steps=" << s.steps.size() << "\n" << prefix << "ok=" << (rep.ok ? "true" : "false") << "\n";
  if (!rep.ok) {
    const Violation &v = *rep.first_violation;
    std::cout << prefix << "violation.step=" << v.step << "\n"
              << prefix << "violation.kind=" << to_string(v.kind) << "\n"
              << prefix << "violation.reason=" << v.reason << "\n";
    return false;
  }
  print_cost(prefix, rep.cost);
  return true;
}

Graph load_graph(const std::string &path) { return parse_graph(read_file(path)); }

struct GenFlags {
  std::string family;
  std::string out;
  int d = 2, n0 = 3, m = 3, copies = 1, count = 2, len = 4, k = 2, q = 3, b0 = 4, b1 = 4, n = 10, max_in = 3;
  std::int64_t g = 1;
  double p = 0.3;
  bool antirecompute = false;
  std::string graph;
  std::string levels;
  std::uint64_t seed = 0;
};

std::vector<std::int64_t> parse_levels(const std::string &text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception &) {
      throw InputError("bad level size '" + tok + "'");
    }
  }
  if (out.empty()) throw InputError("--levels needs a comma-separated list");
  return out;
}

ReductionArtifact generate(const GenFlags &f) {
  const std::string &fam = f.family;
  if (fam == "chain") return gen_chain(f.len);
  if (fam == "independent-chains") return gen_independent_chains(f.count, f.len);
  if (fam == "zipper") {
    ZipperParams p;
    p.d = f.d;
    p.n0 = f.n0;
    p.g = f.g;
    p.antirecompute = f.antirecompute;
    return gen_zipper(p);
  }
  if (fam == "subgroup-cycle") return gen_subgroup_cycle(f.k, f.d, f.n0);
  if (fam == "skip-chain") return gen_skip_chain(f.m, f.copies);
  if (fam == "greedy-adversarial-a") return gen_greedy_adversarial_a(f.d, f.g, f.n0);
  if (fam == "greedy-adversarial-b") return gen_greedy_adversarial_b(f.m, f.g);
  if (fam == "vc-reduction") return gen_vc_reduction(load_graph(f.graph), f.b0, f.b1, f.g);
  if (fam == "clique-reduction") return gen_clique_reduction(load_graph(f.graph), f.q, f.copies);
  if (fam == "io-tradeoff-increase") return gen_io_tradeoff_increase(f.copies, f.g);
  if (fam == "io-tradeoff-decrease") return gen_io_tradeoff_decrease(f.m, f.d, f.g);
  if (fam == "fig1") return gen_fig1();
  if (fam == "level-tower") return gen_level_tower(parse_levels(f.levels));
  if (fam == "random") {
    RandomDagParams p;
    p.n = f.n;
    p.edge_prob = f.p;
    p.max_in_degree = f.max_in;
    p.seed = f.seed ? f.seed : default_seed();
    return gen_random_dag(p);
  }
  throw InputError("unknown family '" + fam + "'");
}

// Instances a witness is written for.
std::vector<ProblemInstance> witness_instances(WitnessKind kind, const ProblemInstance &base) {
  ProblemInstance i = base;
  switch (kind) {
    case WitnessKind::Zipper1p:
    case WitnessKind::Fig1_1p:
      i.k = 1;
      return {i};
    case WitnessKind::Zipper2p:
    case WitnessKind::Fig1_2p:
      i.k = 2;
      return {i};
    case WitnessKind::IoTradeoffIncrease:
    case WitnessKind::IoTradeoffDecrease: {
      ProblemInstance a = base, b = base;
      a.k = 1;
      b.k = 2;
      return {a, b};
    }
    default:
      return {i};
  }
}

int cmd_gen(const GenFlags &f) {
  ReductionArtifact a = generate(f);
  ProblemInstance base = prescribed_instance(a);
  std::cout << "family=" << a.family << "\n";
  for (const auto &[key, value] : a.params) std::cout << "param." << key << "=" << value << "\n";
  std::cout << "n=" << a.dag.n() << "\nm=" << a.dag.m() << "\n";
  print_instance(base);
  for (const auto &[key, value] : a.expected) std::cout << "expected." << key << "=" << to_string(value) << "\n";
  if (f.out.empty()) return kOk;

  write_file(f.out + ".dag", serialize_dag(a.dag));
  write_file(f.out + ".json", artifact_metadata_json(a));
  std::cout << "wrote.dag=" << f.out << ".dag\nwrote.meta=" << f.out << ".json\n";

  WitnessInput input;
  if (a.input_graph && a.family == "vc-reduction") input.cover = vc_bruteforce(*a.input_graph).cover;
  if (a.input_graph && a.family == "clique-reduction") {
    CliqueResult c = clique_bruteforce(*a.input_graph, f.q);
    if (!c.exists) std::cout << "witness.clique=absent\n";
    input.clique = c.clique;
  }
  for (WitnessKind kind : witnesses_for_family(a.family)) {
    for (const ProblemInstance &inst : witness_instances(kind, base)) {
      std::string name = to_string(kind);
      if (kind == WitnessKind::IoTradeoffIncrease || kind == WitnessKind::IoTradeoffDecrease) {
        name += ".k" + std::to_string(inst.k);
      }
      try {
        Strategy s = witness_strategy(kind, a, inst, input);
        CostBreakdown c = cost_of(inst, a.dag, s);
        write_file(f.out + "." + name + ".trace", serialize_strategy(s));
        std::cout << "witness." << name << ".k=" << inst.k << "\n";
        print_cost("witness." + name + ".", c);
      } catch (const WitnessUnavailableError &e) {
        std::cout << "witness." << name << ".unavailable=" << e.what() << "\n";
      }
    }
  }
  return kOk;
}

int cmd_validate(const std::string &dag_path, const std::string &trace_path, const InstanceFlags &flags,
                 bool with_bounds) {
  CompDag d = parse_dag(read_file(dag_path));
  Strategy s = parse_strategy(read_file(trace_path));
  ProblemInstance i = flags.get();
  print_instance(i);
  print_stats(d);
  bool ok = report_validation(i, d, s, "");
  if (ok && with_bounds && d.max_in_degree() < static_cast<std::size_t>(i.r)) {
    print_sandwich(i, d, cost_of(i, d, s).total);
  }
  return ok ? kOk : kFail;
}

struct GreedyFlags {
  std::string score = "count";
  std::string source = "zero";
  std::string eviction = "farthest";
  std::string save = "on-evict";
  std::uint64_t seed = 0;
  bool seeded = false;
};

GreedyPolicy make_policy(const GreedyFlags &f) {
  GreedyPolicy p;
  if (f.score == "count") p.score = GreedyScore::CountRedInNeighbors;
  else if (f.score == "fraction") p.score = GreedyScore::FractionRedInNeighbors;
  else throw InputError("--score must be count or fraction");
  if (f.source == "zero") p.source_fraction = SourceFraction::Zero;
  else if (f.source == "one") p.source_fraction = SourceFraction::One;
  else throw InputError("--source-fraction must be zero or one");
  if (f.eviction == "lru") p.eviction = Eviction::LRU;
  else if (f.eviction == "farthest") p.eviction = Eviction::FarthestNextUse;
  else throw InputError("--eviction must be lru or farthest");
  if (f.save == "on-evict") p.save_policy = SavePolicy::OnEvict;
  else if (f.save == "write-through") p.save_policy = SavePolicy::WriteThroughIfNeededLater;
  else throw InputError("--save must be on-evict or write-through");
  p.tie_seed = f.seeded ? f.seed : (std::getenv("PEBBLE_SEED") ? default_seed() : 0);
  return p;
}

int cmd_greedy(const std::string &dag_path, const InstanceFlags &flags, const GreedyFlags &gf,
               const std::string &out) {
  CompDag d = parse_dag(read_file(dag_path));
  ProblemInstance i = flags.get();
  print_instance(i);
  print_stats(d);
  Strategy s = greedy_schedule(i, d, make_policy(gf));
  bool ok = report_validation(i, d, s, "greedy.");
  if (!ok) return kFail;
  bool sandwich = print_sandwich(i, d, cost_of(i, d, s).total);
  std::cout << "bounds.greedy_factor=" << greedy_upper_factor(i.g, static_cast<std::int64_t>(d.max_in_degree()))
            << "\n";
  if (!out.empty()) write_file(out, serialize_strategy(s));
  return sandwich ? kOk : kFail;
}

struct SolveFlags {
  SearchLimits limits;
  std::string objective = "cost";
  bool serial = false;
  bool reference = false;
  bool compare_greedy = false;
  std::string out;
};

int cmd_solve(const std::string &dag_path, const InstanceFlags &flags, const SolveFlags &sf) {
  CompDag d = parse_dag(read_file(dag_path));
  ProblemInstance i = flags.get();
  print_instance(i);
  print_stats(d);
  Objective obj;
  if (sf.objective == "cost") obj = Objective::MinCost;
  else if (sf.objective == "io") obj = Objective::MinIo;
  else throw InputError("--objective must be cost or io");
  OptResult res;
  if (sf.reference) {
    res = exact_opt_reference(i, d, sf.limits, obj);
  } else {
    SearchOptions o;
    o.objective = obj;
    o.parallel = !sf.serial;
    res = exact_opt(i, d, sf.limits, o);
  }
  std::cout << "solve.status=" << to_string(res.status) << "\nsolve.states=" << res.states << "\n";
  if (res.status != OptStatus::Optimal) {
    std::cout << "solve.reason=" << res.reason << "\n";
    return kFail;
  }
  std::cout << "solve.opt_total=" << res.opt_total << "\nsolve.opt_io_steps=" << res.opt_io_steps
            << "\nsolve.surplus=" << to_string(surplus(res.opt_total, d.n(), i.k)) << "\n";
  bool ok = report_validation(i, d, res.witness, "witness.");
  ok = print_sandwich(i, d, res.opt_total) && ok;
  if (sf.compare_greedy) {
    Strategy s = greedy_schedule(i, d);
    std::int64_t gt = cost_of(i, d, s).total;
    std::cout << "greedy.total=" << gt << "\ngreedy.ratio=" << to_string(Rational(gt, std::max<std::int64_t>(1, res.opt_total)))
              << "\n";
  }
  if (!sf.out.empty()) write_file(sf.out, serialize_strategy(res.witness));
  return ok ? kOk : kFail;
}

struct TowerFlags {
  std::string graph;
  std::string levels;
  int q = 3;
  int copies = 1;
  std::int64_t r = 0;
  std::int64_t g = 1;
  int spill = -1;
  bool keep = false;
  std::size_t max_states = 5'000'000;
};

int cmd_tower_solve(const TowerFlags &f) {
  ReductionArtifact a;
  if (!f.graph.empty()) a = gen_clique_reduction(load_graph(f.graph), f.q, f.copies);
  else if (!f.levels.empty()) a = gen_level_tower(parse_levels(f.levels));
  else throw InputError("tower-solve needs --graph or --levels");
  std::int64_t r = f.r > 0 ? f.r : prescribed_instance(a).r;
  TowerSearchOptions o;
  o.allow_keep = f.keep;
  o.max_states = f.max_states;
  std::cout << "family=" << a.family << "\nn=" << a.dag.n() << "\nr=" << r << "\n";
  TowerSearchResult res = f.spill >= 0 ? tower_min_spill_search(a, r, f.g, f.spill, o) : tower_abstract_opt(a, r, o);
  std::cout << "tower.status=" << to_string(res.status) << "\ntower.states=" << res.states
            << "\ntower.io_cost=" << res.io_cost << "\ntower.moves=" << res.progression.size() << "\n";
  for (std::size_t j = 0; j < res.progression.size(); ++j) {
    std::cout << "tower.move." << j << "=" << to_string(res.progression[j]) << "\n";
  }
  return res.status == TowerStatus::Exhausted ? kFail : kOk;
}

struct BoundFlags {
  std::string formula = "trivial";
  std::string dag;
  std::int64_t n = 0, r = 2, g = 1, max_in = 0, io = 0;
  int k = 1;
};

int cmd_bounds(BoundFlags f) {
  if (!f.dag.empty()) {
    CompDag d = parse_dag(read_file(f.dag));
    f.n = static_cast<std::int64_t>(d.n());
    f.max_in = static_cast<std::int64_t>(d.max_in_degree());
  }
  std::cout << "bounds.formula=" << f.formula << "\nbounds.n=" << f.n << "\nbounds.k=" << f.k << "\nbounds.r=" << f.r
            << "\nbounds.g=" << f.g << "\n";
  if (f.formula == "trivial") {
    BoundResult b = trivial_bounds(f.n, f.k, f.r, f.g, f.max_in);
    std::cout << "bounds.max_in=" << f.max_in << "\nbounds.lower=" << to_string(b.lower)
              << "\nbounds.upper=" << to_string(*b.upper) << "\nbounds.provenance=" << b.provenance << "\n";
  } else if (f.formula == "transfer") {
    IoTransfer t = transfer_io_lower_bound(f.io, f.k);
    std::cout << "bounds.io_spp=" << f.io << "\nbounds.io_lower=" << to_string(t.exact)
              << "\nbounds.io_lower_floor=" << t.floor
              << "\nbounds.cost_lower=" << to_string(transfer_cost_lower_bound(f.io, f.n, f.k, f.g)) << "\n";
  } else if (f.formula == "fft") {
    std::cout << "bounds.value=" << fft_mpp_lower_bound(f.n, f.r, f.k, f.g) << "\n";
  } else if (f.formula == "mmm") {
    RealBound b = mmm_mpp_lower_bound(f.n, f.r, f.k, f.g);
    std::cout << "bounds.value=" << (b.exact ? to_string(*b.exact) : std::to_string(b.value)) << "\n";
  } else if (f.formula == "greedy") {
    std::cout << "bounds.max_in=" << f.max_in << "\nbounds.value=" << greedy_upper_factor(f.g, f.max_in) << "\n";
  } else {
    throw InputError("--formula must be trivial, transfer, fft, mmm or greedy");
  }
  return kOk;
}

int cmd_reduce_vc(const std::string &graph_path, int b0, int b1, std::int64_t g, const std::string &out) {
  Graph graph = load_graph(graph_path);
  ReductionArtifact a = gen_vc_reduction(graph, b0, b1, g);
  ProblemInstance i = prescribed_instance(a);
  CoverResult vc = vc_bruteforce(graph);
  std::cout << "graph.n=" << graph.n << "\ngraph.m=" << graph.m() << "\nn=" << a.dag.n() << "\n";
  print_instance(i);
  std::cout << "vc.size=" << vc.size << "\nvc.cover=";
  for (std::size_t j = 0; j < vc.cover.size(); ++j) std::cout << (j ? "," : "") << vc.cover[j];
  std::cout << "\n";
  Strategy s = witness_strategy(WitnessKind::VcReduction, a, i, {vc.cover, {}});
  bool ok = report_validation(i, a.dag, s, "witness.");
  Rational predicted = a.expected.at("n_prime") + a.expected.at("alpha") * Rational(vc.size);
  std::int64_t total = ok ? cost_of(i, a.dag, s).total : -1;
  bool match = ok && Rational(total) == predicted;
  std::cout << "formula.total=" << to_string(predicted) << "\ncheck.formula=" << (match ? "pass" : "fail") << "\n";
  if (!out.empty()) {
    write_file(out + ".dag", serialize_dag(a.dag));
    write_file(out + ".trace", serialize_strategy(s));
  }
  return match ? kOk : kFail;
}

int cmd_reduce_clique(const std::string &graph_path, int q, int copies, const std::string &out) {
  Graph graph = load_graph(graph_path);
  ReductionArtifact a = gen_clique_reduction(graph, q, copies);
  ProblemInstance i = prescribed_instance(a);
  CliqueResult c = clique_bruteforce(graph, q);
  TowerSearchResult t = tower_abstract_opt(a, i.r);
  std::cout << "graph.n=" << graph.n << "\ngraph.m=" << graph.m() << "\nq=" << q << "\ncopies=" << copies
            << "\nn=" << a.dag.n() << "\n";
  print_instance(i);
  std::cout << "clique.exists=" << (c.exists ? "true" : "false") << "\ntower.status=" << to_string(t.status)
            << "\ntower.states=" << t.states << "\n";
  if (t.status == TowerStatus::Exhausted) return kFail;
  bool agree = c.exists == (t.status == TowerStatus::Feasible);
  std::cout << "check.agree=" << (agree ? "pass" : "fail") << "\n";
  bool ok = agree;
  if (t.status == TowerStatus::Feasible) {
    Strategy s = progression_to_strategy(a, i, t.progression);
    ok = report_validation(i, a.dag, s, "witness.") && ok;
    if (!out.empty()) {
      write_file(out + ".dag", serialize_dag(a.dag));
      write_file(out + ".trace", serialize_strategy(s));
    }
  }
  return ok ? kOk : kFail;
}

int cmd_export_dot(const std::string &dag_path, const std::string &out) {
  CompDag d = parse_dag(read_file(dag_path));
  std::string dot = export_dot(d);
  if (out.empty()) std::cout << dot;
  else write_file(out, dot);
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"multiprocessor red-blue pebbling toolkit"};
  app.require_subcommand(1);

  GenFlags gen;
  auto *g_cmd = app.add_subcommand("gen", "generate a construction");
  g_cmd->add_option("family", gen.family, "chain | independent-chains | zipper | subgroup-cycle | skip-chain | "
                                          "greedy-adversarial-a | greedy-adversarial-b | vc-reduction | "
                                          "clique-reduction | io-tradeoff-increase | io-tradeoff-decrease | fig1 | "
                                          "level-tower | random")
      ->required();
  g_cmd->add_option("--out", gen.out, "output path prefix");
  g_cmd->add_option("--d", gen.d);
  g_cmd->add_option("--n0", gen.n0);
  g_cmd->add_option("--g", gen.g);
  g_cmd->add_option("--m", gen.m);
  g_cmd->add_option("--copies", gen.copies);
  g_cmd->add_option("--count", gen.count);
  g_cmd->add_option("--len", gen.len);
  g_cmd->add_option("--k", gen.k);
  g_cmd->add_option("--q", gen.q);
  g_cmd->add_option("--B0", gen.b0);
  g_cmd->add_option("--B1", gen.b1);
  g_cmd->add_option("--n", gen.n);
  g_cmd->add_option("--p", gen.p);
  g_cmd->add_option("--max-in", gen.max_in);
  g_cmd->add_option("--seed", gen.seed);
  g_cmd->add_option("--graph", gen.graph, "undirected graph file");
  g_cmd->add_option("--levels", gen.levels, "comma-separated level sizes");
  g_cmd->add_flag("--antirecompute", gen.antirecompute);

  std::string dag_path, trace_path, out;
  InstanceFlags inst;
  auto *v_cmd = app.add_subcommand("validate", "replay a trace");
  v_cmd->add_option("dag", dag_path)->required();
  v_cmd->add_option("trace", trace_path)->required();
  inst.attach(v_cmd);
  auto *c_cmd = app.add_subcommand("cost", "replay a trace and compare with the trivial bounds");
  c_cmd->add_option("dag", dag_path)->required();
  c_cmd->add_option("trace", trace_path)->required();
  inst.attach(c_cmd);

  GreedyFlags gf;
  auto *gr_cmd = app.add_subcommand("greedy", "run the greedy scheduler");
  gr_cmd->add_option("dag", dag_path)->required();
  inst.attach(gr_cmd);
  gr_cmd->add_option("--score", gf.score, "count | fraction");
  gr_cmd->add_option("--source-fraction", gf.source, "zero | one");
  gr_cmd->add_option("--eviction", gf.eviction, "lru | farthest");
  gr_cmd->add_option("--save", gf.save, "on-evict | write-through");
  auto *seed_opt = gr_cmd->add_option("--seed", gf.seed, "tie-break seed");
  gr_cmd->add_option("--out", out, "trace output");

  SolveFlags sf;
  auto *s_cmd = app.add_subcommand("solve", "exact optimum on a small DAG");
  s_cmd->add_option("dag", dag_path)->required();
  inst.attach(s_cmd);
  s_cmd->add_option("--max-n", sf.limits.max_n);
  s_cmd->add_option("--max-k", sf.limits.max_k);
  s_cmd->add_option("--max-states", sf.limits.max_states);
  s_cmd->add_option("--max-seconds", sf.limits.max_seconds);
  s_cmd->add_option("--objective", sf.objective, "cost | io");
  s_cmd->add_flag("--serial", sf.serial, "expand states on one thread");
  s_cmd->add_flag("--reference", sf.reference, "unpruned search");
  s_cmd->add_flag("--compare-greedy", sf.compare_greedy);
  s_cmd->add_option("--out", sf.out, "witness trace output");

  TowerFlags tf;
  auto *t_cmd = app.add_subcommand("tower-solve", "level-tower search on a clique reduction or a single tower");
  t_cmd->add_option("--graph", tf.graph);
  t_cmd->add_option("--levels", tf.levels);
  t_cmd->add_option("--q", tf.q);
  t_cmd->add_option("--copies", tf.copies);
  t_cmd->add_option("--r", tf.r);
  t_cmd->add_option("--g", tf.g);
  t_cmd->add_option("--spill", tf.spill, "allow this many single-node spills per copy");
  t_cmd->add_flag("--keep", tf.keep, "allow keeping the old level after an advance");
  t_cmd->add_option("--max-states", tf.max_states);

  BoundFlags bf;
  auto *b_cmd = app.add_subcommand("bounds", "closed-form bounds");
  b_cmd->add_option("--formula", bf.formula, "trivial | transfer | fft | mmm | greedy");
  b_cmd->add_option("--dag", bf.dag, "take n and max in-degree from a DAG file");
  b_cmd->add_option("--n", bf.n);
  b_cmd->add_option("--k", bf.k);
  b_cmd->add_option("--r", bf.r);
  b_cmd->add_option("--g", bf.g);
  b_cmd->add_option("--max-in", bf.max_in);
  b_cmd->add_option("--io", bf.io, "single-processor I/O step count");

  std::string graph_path;
  int b0 = 4, b1 = 4, q = 3, copies = 1;
  std::int64_t gval = 1;
  auto *rv_cmd = app.add_subcommand("reduce-vc", "vertex-cover reduction end to end");
  rv_cmd->add_option("--graph", graph_path)->required();
  rv_cmd->add_option("--B0", b0);
  rv_cmd->add_option("--B1", b1);
  rv_cmd->add_option("--g", gval);
  rv_cmd->add_option("--out", out);
  auto *rc_cmd = app.add_subcommand("reduce-clique", "clique reduction end to end");
  rc_cmd->add_option("--graph", graph_path)->required();
  rc_cmd->add_option("--q", q);
  rc_cmd->add_option("--copies", copies);
  rc_cmd->add_option("--out", out);

  auto *d_cmd = app.add_subcommand("export-dot", "Graphviz output");
  d_cmd->add_option("dag", dag_path)->required();
  d_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g_cmd) return cmd_gen(gen);
    if (*v_cmd) return cmd_validate(dag_path, trace_path, inst, false);
    if (*c_cmd) return cmd_validate(dag_path, trace_path, inst, true);
    if (*gr_cmd) {
      gf.seeded = seed_opt->count() > 0;
      return cmd_greedy(dag_path, inst, gf, out);
    }
    if (*s_cmd) return cmd_solve(dag_path, inst, sf);
    if (*t_cmd) return cmd_tower_solve(tf);
    if (*b_cmd) return cmd_bounds(bf);
    if (*rv_cmd) return cmd_reduce_vc(graph_path, b0, b1, gval, out);
    if (*rc_cmd) return cmd_reduce_clique(graph_path, q, copies, out);
    if (*d_cmd) return cmd_export_dot(dag_path, out);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PebbleError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
