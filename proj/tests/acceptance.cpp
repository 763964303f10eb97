// Acceptance report: one PASS/FAIL line per criterion.
//
// Exit status is non-zero when a criterion fails that is not listed in
// kKnownFailures; those are reported as FAIL but do not break the build.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "restless/errors.hpp"
#include "restless/generators.hpp"
#include "restless/oracle.hpp"
#include "restless/solver_general.hpp"
#include "restless/solver_unit.hpp"
#include "restless/widths.hpp"
#include "support.hpp"

using namespace restless;
using Clock = std::chrono::steady_clock;

namespace {

// Criterion 2 asks for every graph with n <= 4, M <= 6, lifetime <= 5
// (about 4.3e10 arc sets); criterion 4 asks for ladder widths 2 and 3, which
// the activity intervals do not give (4 and 5).
const std::set<int> kKnownFailures{2, 4};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Report {
  int failures_unexpected = 0;
  int passed = 0;

  void line(int id, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (pass) {
      ++passed;
    } else if (!kKnownFailures.contains(id)) {
      ++failures_unexpected;
    }
  }
};

// Path checks shared by criteria 1-6 (criterion 8).
struct PathLedger {
  std::size_t paths = 0;
  std::size_t invalid = 0;
  std::size_t lookup_violations = 0;
  std::size_t max_length = 0;

  void audit(const ReachResult& r, const PointTemporalGraph& g, NodeId s, Time delta) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!r.reachable[v]) continue;
      std::size_t lookups = 0;
      const auto p = retrieve_path(r, g, s, v, delta, &lookups);
      ++paths;
      max_length = std::max(max_length, p.length());
      if (!check_restless_path(g, p, s, v, delta)) ++invalid;
      if (lookups != p.length()) ++lookup_violations;
    }
  }
};

// Every prune/record combination (criterion 9); returns false on any
// disagreement with `expected`.
bool options_agree(const PointTemporalGraph& g, NodeId s, Time delta,
                   const std::vector<bool>& expected, PathLedger* ledger) {
  bool ok = true;
  for (int mask = 0; mask < 4; ++mask) {
    const bool prune = mask & 1;
    const bool record = mask & 2;
    if (g.uniform_delay_one()) {
      UnitOptions u;
      u.prune = prune;
      u.record_paths = record;
      const auto r = solve_unit(g, s, delta, u);
      ok = ok && r.reachable == expected;
      if (record && ledger) ledger->audit(r, g, s, delta);
    }
    GeneralOptions o;
    o.prune = prune;
    o.record_paths = record;
    const auto r = solve_general(g, s, delta, o);
    ok = ok && r.reachable == expected;
    if (record && ledger) ledger->audit(r, g, s, delta);
  }
  return ok;
}

struct OptionTally {
  std::size_t instances = 0;
  std::size_t disagreements = 0;
};

// ------------------------------------------------------------------ 1

void criterion1(Report& rep, PathLedger& ledger) {
  const auto g = restless::testing::diamond_graph();
  const auto start = Clock::now();
  GeneralOptions opts;
  opts.record_paths = true;
  const auto r2 = solve_general(g, 0, 2, opts);
  const bool yes = r2.reachable[3];
  TemporalPath p;
  if (yes) p = retrieve_path_general(r2, g, 0, 3, 2);
  const auto r1 = solve_general(g, 0, 1);
  const double took = seconds_since(start);

  const bool valid = yes && check_restless_path(g, p, 0, 3, 2);
  const bool no = !r1.reachable[3];
  ledger.audit(r2, g, 0, 2);
  std::ostringstream os;
  os << "diamond: delta=2 " << (yes ? "YES" : "NO") << " with " << p.length() << "-arc witness "
     << (valid ? "valid" : "INVALID") << ", delta=1 " << (no ? "NO" : "YES") << ", " << took * 1e3
     << " ms (limit 1 ms)";
  rep.line(1, valid && no && took < 1e-3, os.str());
}

// ------------------------------------------------------------------ 2

struct SweepStats {
  std::size_t graphs = 0;
  std::size_t runs = 0;
  std::size_t mismatches = 0;
  // Oracle and solver time only; the option and path audits are excluded.
  double seconds = 0;
};

void compare_all(const PointTemporalGraph& g, NodeId s, Time delta, SweepStats& st,
                 OptionTally& tally, PathLedger& ledger) {
  const auto start = Clock::now();
  const auto truth = oracle_reachable(g, s, delta).reachable;
  ++st.runs;
  if (g.uniform_delay_one() && solve_unit(g, s, delta).reachable != truth) ++st.mismatches;
  if (solve_general(g, s, delta).reachable != truth) ++st.mismatches;
  st.seconds += seconds_since(start);
  ++tally.instances;
  if (!options_agree(g, s, delta, truth, &ledger)) ++tally.disagreements;
}

void sweep(std::size_t n, std::size_t max_arcs, const std::vector<Time>& delays, SweepStats& st,
           OptionTally& tally, PathLedger& ledger) {
  const auto pool = restless::testing::arc_pool(n, 5, delays);
  restless::testing::for_each_arc_subset(pool, max_arcs, [&](const std::vector<TimedArc>& arcs) {
    if (!restless::testing::canonical_fixing_zero(arcs, n)) return;
    ++st.graphs;
    const PointTemporalGraph g(n, arcs);
    for (Time delta = 0; delta <= 2; ++delta) compare_all(g, 0, delta, st, tally, ledger);
  });
}

void criterion2(Report& rep, OptionTally& tally, PathLedger& ledger) {
  const auto wall = Clock::now();
  SweepStats unit_sweep, general_sweep, random;
  sweep(4, 6, {1}, unit_sweep, tally, ledger);
  sweep(4, 4, {1, 2, 3, 4, 5}, general_sweep, tally, ledger);

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    restless::testing::RandomSpec spec;
    spec.max_delay = trial % 2 == 0 ? 1 : 3;
    const auto c = restless::testing::random_case(rng, spec);
    ++random.graphs;
    compare_all(c.graph, c.source, c.delta, random, tally, ledger);
  }
  const double took = unit_sweep.seconds + general_sweep.seconds + random.seconds;
  const double total = seconds_since(wall);

  const std::size_t bad = unit_sweep.mismatches + general_sweep.mismatches + random.mismatches;
  std::ostringstream os;
  os << "exhaustive part covers n=4, lifetime<=5, delta in {0,1,2}, graphs up to relabeling "
        "fixing the source: unit delay M<=6 ("
     << unit_sweep.graphs << " graphs), delays 1..5 M<=4 (" << general_sweep.graphs
     << " graphs); the full n<=4, M<=6 space with all delays (~4.3e10 arc sets) is not swept; "
     << random.graphs << " random instances (n<=8, M<=20, delays<=3); " << bad
     << " mismatches; " << took << " s checking (limit 300 s), " << total
     << " s with the option and path audits";
  // The literal sweep is not run, so the criterion is not met as stated.
  const bool literal_sweep_done = false;
  rep.line(2, literal_sweep_done && bad == 0 && took < 300, os.str());
}

// ------------------------------------------------------------------ 3

void criterion3(Report& rep) {
  std::mt19937_64 rng(303);
  restless::testing::RandomSpec spec;
  spec.max_nodes = 6;
  spec.max_arcs = 14;
  spec.max_time = 8;
  std::size_t instances = 0, checks = 0, mismatches = 0, unit_instances = 0;
  for (int trial = 0; trial < 300; ++trial) {
    spec.max_delay = trial % 2 == 0 ? 1 : 3;
    const auto c = restless::testing::random_case(rng, spec);
    ++instances;
    if (c.graph.uniform_delay_one()) {
      ++unit_instances;
      UnitOptions u;
      u.on_time_processed = [&](std::size_t i, Time, std::span<const TraceList> table) {
        for (NodeId v = 0; v < table.size(); ++v) {
          std::map<Trace, Time> got;
          for (const auto& e : table[v]) got.emplace(e.trace, e.arrival);
          ++checks;
          if (got != oracle_traces(c.graph, c.source, c.delta, i, v)) ++mismatches;
        }
      };
      solve_unit(c.graph, c.source, c.delta, u);
    }
    GeneralOptions o;
    o.on_time_processed = [&](std::size_t i, Time, std::span<const GeneralTraceList> table) {
      for (NodeId v = 0; v < table.size(); ++v) {
        std::map<Trace, Time> latest;
        for (const auto& [trace, times] : table[v]) latest.emplace(trace, times.to_vector().back());
        ++checks;
        if (latest != oracle_traces(c.graph, c.source, c.delta, i, v)) ++mismatches;
      }
    };
    solve_general(c.graph, c.source, c.delta, o);
  }
  std::ostringstream os;
  os << instances << " random instances (n<=6, " << unit_instances
     << " with unit delays), " << checks << " per-time table comparisons, " << mismatches
     << " mismatches";
  rep.line(3, instances >= 200 && mismatches == 0, os.str());
}

// ------------------------------------------------------------------ 4

void criterion4(Report& rep) {
  std::size_t ladder_bad = 0, shortcut_bad = 0;
  std::set<std::size_t> ladder_seen, shortcut_seen;
  for (std::size_t k = 2; k <= 100; ++k) {
    const auto w = vertex_im_width(gen_ladder(k));
    const auto ws = vertex_im_width(gen_ladder_shortcut(k).graph);
    ladder_seen.insert(w);
    shortcut_seen.insert(ws);
    ladder_bad += w != 2;
    shortcut_bad += ws != 3;
  }

  std::size_t formulas = 0, sat_bad = 0;
  for (std::size_t n : {3, 6, 9}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto inst = gen_sat_instance(gen_random_34sat(n, 4000 + seed));
      ++formulas;
      if (arc_im_width(inst.graph) != 3 || vertex_im_width(inst.graph) < 4 * n) ++sat_bad;
    }
  }

  std::size_t ss_instances = 0, ss_bad = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    std::vector<std::uint64_t> xs(n, 1);
    while (true) {
      const std::uint64_t total = std::accumulate(xs.begin(), xs.end(), std::uint64_t{0});
      for (std::uint64_t x = 1; x <= total; ++x) {
        ++ss_instances;
        if (interval_vertex_im_width(gen_subset_sum_instance({xs, x}).graph) != 3) ++ss_bad;
      }
      std::size_t i = 0;
      while (i < n && xs[i] == 5) xs[i++] = 1;
      if (i == n) break;
      ++xs[i];
    }
  }

  auto list = [](const std::set<std::size_t>& s) {
    std::string out;
    for (auto x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
  };
  std::ostringstream os;
  os << "ladder k=2..100 widths {" << list(ladder_seen) << "} (want 2, " << ladder_bad
     << " off); shortcut widths {" << list(shortcut_seen) << "} (want 3, " << shortcut_bad
     << " off); SAT gadgets " << formulas << " formulas, " << sat_bad << " off; subset-sum "
     << ss_instances << " gadgets, " << ss_bad << " off";
  rep.line(4, ladder_bad == 0 && shortcut_bad == 0 && sat_bad == 0 && ss_bad == 0, os.str());
}

// ------------------------------------------------------------------ 5

void criterion5(Report& rep, OptionTally& tally, PathLedger& ledger) {
  const auto start = Clock::now();
  std::size_t formulas = 0, mismatches = 0, satisfiable = 0;
  for (std::size_t n : {3, 6, 9}) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto f = gen_random_34sat(n, 5000 + 100 * n + seed);
      const auto inst = gen_sat_instance(f);
      const bool truth = sat_bruteforce(f, true);
      satisfiable += truth;
      ++formulas;
      const auto r = solve_unit(inst.graph, inst.source, inst.delta_max);
      if (r.reachable[*inst.target] != truth) ++mismatches;
      ++tally.instances;
      if (!options_agree(inst.graph, inst.source, inst.delta_max, r.reachable, &ledger)) {
        ++tally.disagreements;
      }
    }
  }
  const double took = seconds_since(start);
  std::ostringstream os;
  os << formulas << " random exact (3,4) formulas (n in {3,6,9}, " << satisfiable
     << " satisfiable), " << mismatches << " mismatches, " << took << " s (limit 120 s)";
  rep.line(5, formulas >= 100 && mismatches == 0 && took < 120, os.str());
}

// ------------------------------------------------------------------ 6

void criterion6(Report& rep, OptionTally& tally, PathLedger& ledger) {
  const auto start = Clock::now();
  std::size_t instances = 0, mismatches = 0, yes = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::uint64_t> xs(n, 1);
    while (true) {
      const std::uint64_t total = std::accumulate(xs.begin(), xs.end(), std::uint64_t{0});
      for (std::uint64_t x = 1; x <= total; ++x) {
        const auto inst = gen_subset_sum_instance({xs, x});
        const auto g = expand_interval_to_point(inst.graph);
        const bool truth = subset_sum_bruteforce(xs, x);
        const auto r = solve_general(g, inst.source, inst.delta_max);
        ++instances;
        yes += truth;
        if (r.reachable[*inst.target] != truth) ++mismatches;
        ++tally.instances;
        if (!options_agree(g, inst.source, inst.delta_max, r.reachable, &ledger)) {
          ++tally.disagreements;
        }
      }
      std::size_t i = 0;
      while (i < n && xs[i] == 5) xs[i++] = 1;
      if (i == n) break;
      ++xs[i];
    }
  }
  const double took = seconds_since(start);
  std::ostringstream os;
  os << instances << " subset-sum instances (n<=5, x_i<=5, 1<=X<=sum; " << yes << " yes), "
     << mismatches << " mismatches, " << took << " s (limit 300 s)";
  rep.line(6, mismatches == 0 && took < 300, os.str());
}

// ------------------------------------------------------------------ 7

void criterion7(Report& rep) {
  std::vector<double> best;
  std::vector<std::size_t> arcs;
  bool complete = true;
  for (std::size_t m : {1000, 10000, 100000}) {
    const auto g = gen_ladder((m + 4) / 6);
    arcs.push_back(g.arc_count());
    double fastest = 1e9;
    for (int rep_i = 0; rep_i < 7; ++rep_i) {
      const auto start = Clock::now();
      const auto r = solve_unit(g, 0, g.lifetime());
      fastest = std::min(fastest, seconds_since(start));
      complete = complete && r.reachable_nodes().size() == g.node_count();
    }
    best.push_back(fastest);
  }
  const double r1 = best[1] / best[0];
  const double r2 = best[2] / best[1];
  std::ostringstream os;
  os << "ladder M=" << arcs[0] << "/" << arcs[1] << "/" << arcs[2] << ": " << best[0] * 1e3
     << " / " << best[1] * 1e3 << " / " << best[2] * 1e3 << " ms (min of 7); growth " << r1
     << "x, " << r2 << "x per decade (limit 15x); largest " << best[2] << " s (limit 5 s)";
  if (!complete) os << "; ladder not fully reachable";
  rep.line(7, complete && r1 <= 15 && r2 <= 15 && best[2] < 5, os.str());
}

}  // namespace

int main() {
  Report rep;
  PathLedger ledger;
  OptionTally tally;
  try {
    criterion1(rep, ledger);
    criterion2(rep, tally, ledger);
    criterion3(rep);
    criterion4(rep);
    criterion5(rep, tally, ledger);
    criterion6(rep, tally, ledger);
    criterion7(rep);

    std::ostringstream p8;
    p8 << ledger.paths << " retrieved paths over criteria 1,2,5,6 (longest " << ledger.max_length
       << " arcs), " << ledger.invalid << " invalid, " << ledger.lookup_violations
       << " with parent lookups != path length";
    rep.line(8, ledger.paths > 0 && ledger.invalid == 0 && ledger.lookup_violations == 0,
             p8.str());

    std::ostringstream p9;
    p9 << tally.instances << " instances from criteria 2,5,6 under all prune/record combinations, "
       << tally.disagreements << " with a changed reachable set";
    rep.line(9, tally.instances > 0 && tally.disagreements == 0, p9.str());
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d/9 PASS; known failures:", rep.passed);
  for (int id : kKnownFailures) std::printf(" %d", id);
  std::printf("\n");
  return rep.failures_unexpected == 0 ? 0 : 1;
}
