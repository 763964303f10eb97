#include "doctest.h"

#include <map>
#include <set>

#include "restless/errors.hpp"
#include "restless/generators.hpp"
#include "restless/oracle.hpp"
#include "restless/solver_unit.hpp"
#include "restless/widths.hpp"

using namespace restless;

namespace {

// One clause per row, every variable exactly four times.
CnfFormula tiny_formula() {
  return CnfFormula{3, {{1, 2, 3}, {-1, -2, -3}, {1, -2, 3}, {-1, 2, -3}}};
}

}  // namespace

TEST_CASE("exact (3,4) validation") {
  CHECK(validate_exact_34(tiny_formula()).ok());
  CHECK_FALSE(validate_exact_34(CnfFormula{3, {{1, 2, 3}}}).ok());
  CHECK_FALSE(validate_exact_34(CnfFormula{1, {{1, 1}}}).ok());
  CHECK_THROWS_AS(gen_sat_instance(CnfFormula{3, {{1, 2}}}), ValidationError);
}

TEST_CASE("SAT gadget shape") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 3 * (1 + seed % 3);
    const auto f = gen_random_34sat(n, seed);
    REQUIRE(validate_exact_34(f).ok());
    const std::size_t m = f.clauses.size();
    const auto inst = gen_sat_instance(f);
    const auto& g = inst.graph;
    CHECK(g.node_count() == (n + 2) + (m + 1) + 8 * n);
    CHECK(g.arc_count() == 10 * n + 2 + 6 * m);
    CHECK(g.uniform_delay_one());
    CHECK(inst.delta_max == 1);
    CHECK(inst.labels[inst.source] == "s_0");
    CHECK(inst.labels[*inst.target] == "c_" + std::to_string(m + 1));

    std::map<std::pair<NodeId, NodeId>, std::set<Time>> times;
    for (const auto& a : g.arcs()) {
      CHECK(a.tau % 2 == 0);
      times[{a.u, a.v}].insert(a.tau);
    }
    for (const auto& [arc, ts] : times) CHECK(ts.size() == 1);

    CHECK(arc_im_width(g) == 3);
    CHECK(vertex_im_width(g) >= 4 * n);
  }
}

TEST_CASE("SAT gadget reachability matches satisfiability") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const std::size_t n = seed % 2 == 0 ? 3 : 6;
    const auto f = gen_random_34sat(n, seed);
    const auto inst = gen_sat_instance(f);
    const auto r = solve_unit(inst.graph, inst.source, inst.delta_max);
    CHECK(r.reachable[*inst.target] == sat_bruteforce(f, true));
  }
  const auto inst = gen_sat_instance(tiny_formula());
  CHECK(solve_unit(inst.graph, inst.source, 1).reachable[*inst.target]);
}

TEST_CASE("subset-sum schedule") {
  const auto sch = subset_sum_schedule({1, 2});
  CHECK(sch.delay == std::vector<Time>{1, 2, 4});
  CHECK(sch.sigma == std::vector<Time>{0, 1, 3});
  CHECK(sch.tau == std::vector<Time>{0, 2, 6});
  CHECK_THROWS_AS(subset_sum_schedule({kTimeMax / 2, kTimeMax / 2, kTimeMax / 2}), OverflowError);
}

TEST_CASE("subset-sum gadget") {
  const auto inst = gen_subset_sum_instance({{1, 2}, 3});
  CHECK(inst.graph.node_count() == 4);
  CHECK(inst.graph.arc_count() == 5);
  CHECK(inst.labels == std::vector<std::string>{"0", "1", "2", "t"});
  CHECK(inst.delta_max == 0);
  CHECK_THROWS_AS(gen_subset_sum_instance({{1, 0}, 3}), ValidationError);
  CHECK_THROWS_AS(gen_subset_sum_instance({{1, 2}, 0}), ValidationError);

  const auto one = gen_subset_sum_instance({{1}, 1});
  const auto p = expand_interval_to_point(one.graph);
  CHECK(oracle_reachable(p, 0, 0).reachable[*one.target]);
}

TEST_CASE("subset-sum arrival windows") {
  // Earliest and latest 0-restless arrival at node i are sigma_i and tau_i.
  OracleOptions opts;
  opts.max_arcs = 400;
  for (const auto& xs : std::vector<std::vector<std::uint64_t>>{{1, 2}, {2, 1, 3}, {1, 1, 1}}) {
    const auto inst = gen_subset_sum_instance({xs, 1});
    const auto g = expand_interval_to_point(inst.graph);
    const auto sch = subset_sum_schedule(xs);
    std::set<Time> taus;
    for (const auto& a : g.arcs()) taus.insert(a.tau);
    for (std::size_t i = 1; i <= xs.size(); ++i) {
      std::set<Time> arrivals;
      for (const auto& [trace, ts] :
           oracle_trace_arrivals(g, 0, 0, taus.size() - 1, static_cast<NodeId>(i), opts)) {
        arrivals.insert(ts.begin(), ts.end());
      }
      REQUIRE_FALSE(arrivals.empty());
      CHECK(*arrivals.begin() == sch.sigma[i]);
      CHECK(*arrivals.rbegin() == sch.tau[i]);
    }
  }
}

TEST_CASE("ladders") {
  const auto g = gen_ladder(3);
  CHECK(g.node_count() == 6);
  CHECK(g.arc_count() == 2 * 3 + 4 * 2);
  CHECK(ladder_labels(3) == std::vector<std::string>{"u_0", "u_1", "u_2", "v_0", "v_1", "v_2"});
  CHECK_THROWS_AS(gen_ladder(1), ValidationError);
  const auto sc = gen_ladder_shortcut(4);
  CHECK(sc.graph.node_count() == 9);
  CHECK(sc.labels.back() == "w");
  CHECK(*sc.target == 3);
  CHECK(solve_unit(sc.graph, sc.source, sc.delta_max).reachable[*sc.target]);
}

TEST_CASE("random generators are deterministic") {
  CHECK(gen_random_point(6, 30, 10, 3, 7) == gen_random_point(6, 30, 10, 3, 7));
  CHECK_FALSE(gen_random_point(6, 30, 10, 3, 7) == gen_random_point(6, 30, 10, 3, 8));
  const auto loops = gen_random_point(4, 100, 10, 3, 1);
  for (const auto& a : loops.arcs()) CHECK(a.u != a.v);
  const auto f = gen_random_34sat(9, 5);
  CHECK(f.clauses == gen_random_34sat(9, 5).clauses);
  CHECK(f.clauses.size() == 12);
  for (const auto& c : f.clauses) {
    CHECK(std::abs(c[0]) != std::abs(c[1]));
    CHECK(std::abs(c[0]) != std::abs(c[2]));
    CHECK(std::abs(c[1]) != std::abs(c[2]));
  }
  CHECK_THROWS_AS(gen_random_34sat(4, 1), ValidationError);
}
