// restless: command-line front end for the restless temporal path library.
//
//   restless solve    <graph> --source S [--target T] --delta D [--path] [--json]
//   restless width    <graph> [--vertex|--arc]
//   restless generate sat|subsetsum|ladder|random|random-cnf ...
//   restless check    [<graph>] [--source S --delta D] [--trials N --seed X]
//   restless bench    ladder|random|file [--sizes a,b,c] [--repeats R] [--json]
//
// Exit codes: 0 success / reachable, 1 not reachable (or check mismatch),
// 2 usage or parse error, 3 resource guard.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "restless/errors.hpp"
#include "restless/generators.hpp"
#include "restless/io.hpp"
#include "restless/oracle.hpp"
#include "restless/solver_general.hpp"
#include "restless/solver_unit.hpp"
#include "restless/widths.hpp"

namespace {

using namespace restless;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Engine { automatic, unit, general };

struct SolveRequest {
  Engine engine = Engine::automatic;
  bool non_strict = false;
  bool prune = false;
  bool record_paths = false;
};

bool use_non_strict(const PointTemporalGraph& g, const SolveRequest& req) {
  if (req.non_strict) return true;
  return req.engine == Engine::automatic && g.non_strict() && g.all_delays_zero() &&
         g.arc_count() > 0;
}

ReachResult run_solver(const PointTemporalGraph& g, NodeId s, Time delta, const SolveRequest& req) {
  if (req.engine == Engine::general && req.non_strict) {
    throw UsageError("--nonstrict runs the unit solver; it cannot be combined with --general");
  }
  const bool unit = req.engine == Engine::unit ||
                    (req.engine == Engine::automatic &&
                     (use_non_strict(g, req) || g.uniform_delay_one()));
  if (unit) {
    UnitOptions opts;
    opts.record_paths = req.record_paths;
    opts.prune = req.prune;
    opts.non_strict = use_non_strict(g, req);
    return solve_unit(g, s, delta, opts);
  }
  GeneralOptions opts;
  opts.record_paths = req.record_paths;
  opts.prune = req.prune;
  return solve_general(g, s, delta, opts);
}

GraphFile load(const std::string& path) { return parse_graph(read_file(path)); }

PointTemporalGraph as_point(const GraphFile& file) {
  if (file.is_point()) return std::get<PointTemporalGraph>(file.graph);
  return expand_interval_to_point(std::get<IntervalTemporalGraph>(file.graph));
}

std::string name_of(const GraphFile& file, NodeId v) {
  if (v < file.labels.size() && !file.labels[v].empty()) return file.labels[v];
  return std::to_string(v);
}

NodeId pick_node(const GraphFile& file, const std::string& flag, const std::string& given,
                 std::optional<NodeId> fallback) {
  if (!given.empty()) {
    try {
      return resolve_node(file, given);
    } catch (const ParseError&) {
      throw UsageError(flag + ": unknown node '" + given + "'");
    }
  }
  if (fallback) return *fallback;
  throw UsageError(flag + " is required (the file carries no instance line)");
}

Time pick_delta(const GraphFile& file, const std::optional<Time>& given) {
  if (given) return *given;
  if (file.delta_max) return *file.delta_max;
  throw UsageError("--delta is required (the file carries no instance line)");
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string input;
  std::string source;
  std::string target;
  std::optional<Time> delta;
  bool unit = false;
  bool general = false;
  bool automatic = false;
  bool path = false;
  bool prune = false;
  bool non_strict = false;
  bool json = false;
};

int cmd_solve(const SolveArgs& a) {
  const auto file = load(a.input);
  const auto g = as_point(file);
  const NodeId s = pick_node(file, "--source", a.source, file.source);
  std::optional<NodeId> t;
  if (!a.target.empty()) t = pick_node(file, "--target", a.target, std::nullopt);
  const Time delta = pick_delta(file, a.delta);

  SolveRequest req;
  req.engine = a.unit ? Engine::unit : a.general ? Engine::general : Engine::automatic;
  req.non_strict = a.non_strict;
  req.prune = a.prune;
  req.record_paths = a.path || a.json;
  const auto result = run_solver(g, s, delta, req);

  std::optional<TemporalPath> witness;
  if (t && result.reachable[*t] && req.record_paths) {
    witness = *t == s ? TemporalPath{} : retrieve_path(result, g, s, *t, delta);
  }

  if (a.json) {
    json doc;
    doc["reachable"] = result.reachable_nodes();
    json arcs = json::array();
    if (witness) {
      for (const auto& arc : witness->arcs) arcs.push_back({arc.u, arc.v, arc.tau, arc.delta});
    }
    doc["path"] = std::move(arcs);
    doc["width"] = vertex_im_width(g);
    if (t) doc["answer"] = result.reachable[*t] ? "YES" : "NO";
    std::cout << doc.dump() << "\n";
  } else if (t) {
    std::cout << (result.reachable[*t] ? "YES" : "NO") << "\n";
    if (a.path && witness) {
      for (const auto& arc : witness->arcs) {
        std::cout << name_of(file, arc.u) << " " << name_of(file, arc.v) << " " << arc.tau
                  << " " << arc.delta << "\n";
      }
    }
  } else {
    for (NodeId v : result.reachable_nodes()) std::cout << name_of(file, v) << "\n";
  }
  if (t && !result.reachable[*t]) return kExitNo;
  return kExitOk;
}

// ---------------------------------------------------------------- width

int cmd_width(const std::string& input, bool arc) {
  const auto file = load(input);
  std::size_t k = 0;
  if (file.is_point()) {
    const auto& g = std::get<PointTemporalGraph>(file.graph);
    k = arc ? arc_im_width(g) : vertex_im_width(g);
  } else {
    const auto& g = std::get<IntervalTemporalGraph>(file.graph);
    if (arc) {
      std::vector<ActivityInterval> spans;
      for (const auto& [key, iv] : activity_bounds(g).arcs) spans.push_back(iv);
      k = max_overlap(spans);
    } else {
      k = interval_vertex_im_width(g);
    }
  }
  std::cout << k << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- generate

std::vector<std::uint64_t> parse_items(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      if (!item.empty() && item[0] == '-') throw std::invalid_argument("negative");
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw UsageError("bad subset-sum item '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("subset-sum item list is empty");
  return out;
}

// ---------------------------------------------------------------- check

struct CheckOutcome {
  bool match = true;
  std::string detail;
};

CheckOutcome compare_with_oracle(const PointTemporalGraph& g, NodeId s, Time delta) {
  OracleOptions oopts;
  oopts.non_strict = g.non_strict();
  const auto truth = oracle_reachable(g, s, delta, oopts);

  std::vector<std::pair<std::string, SolveRequest>> runs;
  if (g.arc_count() > 0 && g.non_strict() && g.all_delays_zero()) {
    runs.push_back({"unit-nonstrict", {Engine::unit, true, false, true}});
  } else {
    if (g.uniform_delay_one()) runs.push_back({"unit", {Engine::unit, false, false, true}});
    if (!g.non_strict() || !g.all_delays_zero()) {
      runs.push_back({"general", {Engine::general, false, false, true}});
    }
  }

  CheckOutcome out;
  for (const auto& [name, req] : runs) {
    const auto got = run_solver(g, s, delta, req);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (got.reachable[v] != truth.reachable[v]) {
        out.match = false;
        out.detail += name + ": node " + std::to_string(v) + " solver=" +
                      (got.reachable[v] ? "yes" : "no") +
                      " oracle=" + (truth.reachable[v] ? "yes" : "no") + "\n";
        continue;
      }
      if (!got.reachable[v] || v == s) continue;
      const auto path = retrieve_path(got, g, s, v, delta);
      if (!check_restless_path(g, path, s, v, delta)) {
        out.match = false;
        out.detail += name + ": invalid witness for node " + std::to_string(v) + "\n";
      }
    }
  }
  return out;
}

// Greedily drops arcs while the mismatch persists.
PointTemporalGraph shrink(PointTemporalGraph g, NodeId s, Time delta) {
  bool progress = true;
  while (progress) {
    progress = false;
    const auto arcs = g.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      std::vector<TimedArc> fewer(arcs.begin(), arcs.end());
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      PointTemporalGraph candidate(g.node_count(), std::move(fewer), g.non_strict());
      if (!compare_with_oracle(candidate, s, delta).match) {
        g = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return g;
}

bool check_one(const PointTemporalGraph& g, NodeId s, Time delta, const std::string& tag) {
  const auto outcome = compare_with_oracle(g, s, delta);
  if (outcome.match) {
    std::cout << "MATCH " << tag << "\n";
    return true;
  }
  std::cout << "MISMATCH " << tag << "\n" << outcome.detail;
  GraphFile dump;
  dump.graph = shrink(g, s, delta);
  dump.labels.assign(g.node_count(), "");
  dump.source = s;
  dump.delta_max = delta;
  std::cout << "# minimal reproducer\n" << serialize_graph(dump);
  return false;
}

struct CheckArgs {
  std::string input;
  std::string source;
  std::optional<Time> delta;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

int cmd_check(const CheckArgs& a) {
  if (!a.input.empty()) {
    const auto file = load(a.input);
    const auto g = as_point(file);
    const NodeId s = pick_node(file, "--source", a.source, file.source.value_or(0));
    const Time delta = pick_delta(file, a.delta);
    return check_one(g, s, delta, "n=" + std::to_string(g.node_count()) + " M=" +
                                      std::to_string(g.arc_count()) +
                                      " delta=" + std::to_string(delta))
               ? kExitOk
               : kExitNo;
  }

  std::mt19937_64 rng(a.seed);
  std::size_t mismatches = 0;
  for (std::size_t trial = 0; trial < a.trials; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 20)(rng);
    const Time horizon = std::uniform_int_distribution<Time>(0, 12)(rng);
    const Time max_delay = trial % 2 == 0 ? 1 : 3;
    const auto g = gen_random_point(n, m, horizon, max_delay, rng());
    const auto s = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    const Time delta = std::uniform_int_distribution<Time>(0, 3)(rng);
    const std::string tag = "trial=" + std::to_string(trial) + " n=" + std::to_string(n) +
                            " M=" + std::to_string(m) + " delta=" + std::to_string(delta);
    if (!check_one(g, s, delta, tag)) ++mismatches;
  }
  std::cout << "checked " << a.trials << " instances: " << (a.trials - mismatches) << " MATCH, "
            << mismatches << " MISMATCH\n";
  return mismatches == 0 ? kExitOk : kExitNo;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string family;
  std::vector<std::size_t> sizes{1000, 10000, 100000};
  std::optional<Time> delta;
  std::size_t repeats = 1;
  std::size_t nodes = 6;
  Time max_delay = 1;
  std::uint64_t seed = 1;
  std::string input;
  bool json = false;
};

int cmd_bench(const BenchArgs& a) {
  if (a.repeats == 0) throw UsageError("--repeats must be positive");
  struct Case {
    std::string descriptor;
    PointTemporalGraph graph;
    NodeId source = 0;
    Time delta = 0;
  };
  std::vector<Case> cases;
  if (a.family == "file") {
    if (a.input.empty()) throw UsageError("bench file needs --input");
    const auto file = load(a.input);
    auto g = as_point(file);
    const Time delta = a.delta ? *a.delta : file.delta_max.value_or(g.lifetime());
    cases.push_back({a.input, std::move(g), file.source.value_or(0), delta});
  } else {
    for (std::size_t size : a.sizes) {
      if (a.family == "ladder") {
        const std::size_t k = std::max<std::size_t>(2, (size + 4) / 6);
        auto g = gen_ladder(k);
        const Time delta = a.delta.value_or(g.lifetime());
        cases.push_back({"ladder k=" + std::to_string(k), std::move(g), 0, delta});
      } else if (a.family == "random") {
        const Time horizon = std::max<std::size_t>(1, size / 4);
        auto g = gen_random_point(a.nodes, size, horizon, a.max_delay, a.seed + size);
        const Time delta = a.delta.value_or(2);
        cases.push_back({"random n=" + std::to_string(a.nodes) + " M=" + std::to_string(size),
                         std::move(g), 0, delta});
      } else {
        throw UsageError("unknown bench family '" + a.family + "' (ladder, random, file)");
      }
    }
  }

  if (!a.json) std::cout << "instance\tn\tM\tk\tdelta\trepeat\tseconds\tpeak_table\treachable\n";
  for (const auto& c : cases) {
    const std::size_t k = vertex_im_width(c.graph);
    for (std::size_t r = 0; r < a.repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = run_solver(c.graph, c.source, c.delta, SolveRequest{});
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      const std::size_t reached = result.reachable_nodes().size();
      if (a.json) {
        json rec = {{"instance", c.descriptor},
                    {"n", c.graph.node_count()},
                    {"M", c.graph.arc_count()},
                    {"k", k},
                    {"delta", c.delta},
                    {"repeat", r},
                    {"seconds", took.count()},
                    {"peak_table", result.stats.peak_table_size},
                    {"reachable", reached}};
        std::cout << rec.dump() << "\n";
      } else {
        std::cout << c.descriptor << "\t" << c.graph.node_count() << "\t" << c.graph.arc_count()
                  << "\t" << k << "\t" << c.delta << "\t" << r << "\t" << took.count() << "\t"
                  << result.stats.peak_table_size << "\t" << reached << "\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restless temporal path reachability"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* sub_solve = app.add_subcommand("solve", "Delta-restless reachability from a source");
  sub_solve->add_option("input", solve.input, "Graph file")->required();
  sub_solve->add_option("--source,-s", solve.source, "Source node (id or label)");
  sub_solve->add_option("--target,-t", solve.target, "Target node (id or label)");
  sub_solve->add_option("--delta,-d", solve.delta, "Maximum waiting time");
  auto* f_unit = sub_solve->add_flag("--unit", solve.unit, "Unit-delay solver");
  auto* f_general = sub_solve->add_flag("--general", solve.general, "General-delay solver");
  auto* f_auto = sub_solve->add_flag("--auto", solve.automatic, "Pick the solver from the delays");
  f_unit->excludes(f_general)->excludes(f_auto);
  f_general->excludes(f_auto);
  sub_solve->add_flag("--path", solve.path, "Print a witness path for the target");
  sub_solve->add_flag("--prune", solve.prune, "Drop entries that can no longer extend");
  sub_solve->add_flag("--nonstrict", solve.non_strict, "Zero-delay (non-strict) semantics");
  sub_solve->add_flag("--json", solve.json, "Single JSON document output");

  std::string width_input;
  bool width_vertex = false;
  bool width_arc = false;
  auto* sub_width = app.add_subcommand("width", "Vertex or arc interval-membership width");
  sub_width->add_option("input", width_input, "Graph file")->required();
  auto* f_vertex = sub_width->add_flag("--vertex", width_vertex, "Vertex width (default)");
  sub_width->add_flag("--arc", width_arc, "Arc width")->excludes(f_vertex);

  auto* sub_gen = app.add_subcommand("generate", "Write a generated instance to stdout");
  sub_gen->require_subcommand(1);
  std::string cnf_path;
  auto* gen_sat = sub_gen->add_subcommand("sat", "Exact (3,4)-SAT gadget from a DIMACS file");
  gen_sat->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  std::string items;
  std::uint64_t target_sum = 0;
  auto* gen_ss = sub_gen->add_subcommand("subsetsum", "Subset-sum interval gadget");
  gen_ss->add_option("items", items, "Comma-separated positive integers")->required();
  gen_ss->add_option("target", target_sum, "Target sum")->required();
  std::size_t rungs = 0;
  bool shortcut = false;
  auto* gen_lad = sub_gen->add_subcommand("ladder", "Ladder of k rungs");
  gen_lad->add_option("k", rungs, "Number of rungs")->required();
  gen_lad->add_flag("--shortcut", shortcut, "Add the shortcut node w");
  std::size_t r_nodes = 6, r_arcs = 12;
  Time r_time = 10, r_delay = 1;
  std::uint64_t seed = 1;
  auto* gen_rand = sub_gen->add_subcommand("random", "Uniform random point graph");
  gen_rand->add_option("--nodes,-n", r_nodes, "Node count");
  gen_rand->add_option("--arcs,-m", r_arcs, "Arc count");
  gen_rand->add_option("--max-time", r_time, "Largest appearance time");
  gen_rand->add_option("--max-delay", r_delay, "Largest delay");
  std::size_t cnf_vars = 3;
  auto* gen_cnf = sub_gen->add_subcommand("random-cnf", "Random exact (3,4) formula (DIMACS)");
  gen_cnf->add_option("--vars", cnf_vars, "Variable count, a multiple of 3");
  gen_rand->add_option("--seed", seed, "Random seed");
  gen_cnf->add_option("--seed", seed, "Random seed");

  CheckArgs check;
  auto* sub_check = app.add_subcommand("check", "Cross-check the solvers against the oracle");
  sub_check->add_option("input", check.input, "Graph file (omit for a random batch)");
  sub_check->add_option("--source,-s", check.source, "Source node");
  sub_check->add_option("--delta,-d", check.delta, "Maximum waiting time");
  sub_check->add_option("--trials", check.trials, "Random instances to check");
  sub_check->add_option("--seed", check.seed, "Random seed");

  BenchArgs bench;
  auto* sub_bench = app.add_subcommand("bench", "Time the solver over a size sweep");
  sub_bench->add_option("family", bench.family, "ladder, random or file")->required();
  sub_bench->add_option("--sizes", bench.sizes, "Arc counts to sweep")->delimiter(',');
  sub_bench->add_option("--delta,-d", bench.delta, "Maximum waiting time");
  sub_bench->add_option("--repeats", bench.repeats, "Runs per size");
  sub_bench->add_option("--nodes", bench.nodes, "Node count (random family)");
  sub_bench->add_option("--max-delay", bench.max_delay, "Largest delay (random family)");
  sub_bench->add_option("--seed", bench.seed, "Random seed");
  sub_bench->add_option("--input", bench.input, "Graph file (file family)");
  sub_bench->add_flag("--json", bench.json, "One JSON record per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sub_solve) return cmd_solve(solve);
    if (*sub_width) return cmd_width(width_input, width_arc);
    if (*sub_check) return cmd_check(check);
    if (*sub_bench) return cmd_bench(bench);
    if (*gen_sat) {
      const auto inst = gen_sat_instance(parse_dimacs(read_file(cnf_path)));
      std::cout << serialize_graph(to_graph_file(inst));
    } else if (*gen_ss) {
      const auto inst = gen_subset_sum_instance({parse_items(items), target_sum});
      std::cout << serialize_graph(to_graph_file(inst));
    } else if (*gen_lad) {
      if (shortcut) {
        std::cout << serialize_graph(to_graph_file(gen_ladder_shortcut(rungs)));
      } else {
        GraphFile f;
        f.graph = gen_ladder(rungs);
        f.labels = ladder_labels(rungs);
        std::cout << serialize_graph(f);
      }
    } else if (*gen_rand) {
      std::cout << serialize_graph(gen_random_point(r_nodes, r_arcs, r_time, r_delay, seed));
    } else if (*gen_cnf) {
      std::cout << serialize_dimacs(gen_random_34sat(cnf_vars, seed));
    }
    return kExitOk;
  } catch (const ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
