#include "doctest.h"

#include <random>

#include "restless/errors.hpp"
#include "restless/generators.hpp"
#include "restless/io.hpp"
#include "support.hpp"

using namespace restless;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    (void)parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse simple files") {
  auto p = parse_graph("point 2\n0 1 3 1\n");
  REQUIRE(p.is_point());
  const auto& g = std::get<PointTemporalGraph>(p.graph);
  CHECK(g.arc_count() == 1);
  CHECK(g.arcs()[0] == TimedArc{0, 1, 3, 1});

  auto i = parse_graph("interval 2\n0 1 2 4 1\n");
  REQUIRE_FALSE(i.is_point());
  CHECK(std::get<IntervalTemporalGraph>(i.graph).arcs()[0] == IntervalTimedArc{0, 1, 2, 4, 1});
}

TEST_CASE("comments, labels, instance line and sorting") {
  auto f = parse_graph(
      "# leading comment\n"
      "point 3   # trailing\n"
      "# label 0 s\n"
      "# label 2 t\n"
      "# instance source 0 target 2 delta 4\n"
      "\n"
      "1 2 9 1\r\n"
      "0 1 3 2\n");
  CHECK_FALSE(f.input_was_sorted);
  CHECK(f.labels == std::vector<std::string>{"s", "", "t"});
  CHECK(f.source == 0u);
  CHECK(f.target == 2u);
  CHECK(f.delta_max == 4u);
  CHECK(std::get<PointTemporalGraph>(f.graph).arcs()[0].tau == 3);
  CHECK(resolve_node(f, "t") == 2);
  CHECK(resolve_node(f, "1") == 1);
  CHECK_THROWS_AS(resolve_node(f, "x"), ParseError);
}

TEST_CASE("parse errors carry the line number") {
  CHECK(error_line("point 2\n0 1 3\n") == 2);
  CHECK(error_line("point 2\n0 1 3 1\n0 2 3 1\n") == 3);
  CHECK(error_line("interval 2\n0 1 5 4 1\n") == 2);
  CHECK(error_line("point 2\n\n0 1 3 0\n") == 3);
  CHECK(error_line("point 2 nonstrict\n0 1 3 0\n") == 0);
  CHECK(error_line("graph 2\n") == 1);
  CHECK(error_line("point 2\n0 1 x 1\n") == 2);
  CHECK(error_line("point 2\n0 1 -3 1\n") == 2);
  CHECK(error_line("point 2\n0 1 18446744073709551615 1\n") == 2);
  CHECK(error_line("") == 1);
  CHECK(error_line("point 2\n# label 5 z\n") == 2);
}

TEST_CASE("round trip") {
  SUBCASE("diamond") {
    const auto g = restless::testing::diamond_graph();
    auto back = parse_graph(serialize_graph(g));
    CHECK(std::get<PointTemporalGraph>(back.graph) == g);
  }
  SUBCASE("generated files") {
    std::vector<GraphFile> files;
    files.push_back(to_graph_file(gen_sat_instance(gen_random_34sat(6, 3))));
    files.push_back(to_graph_file(gen_subset_sum_instance({{3, 1, 4}, 5})));
    files.push_back(to_graph_file(gen_ladder_shortcut(6)));
    GraphFile ladder;
    ladder.graph = gen_ladder(5);
    ladder.labels = ladder_labels(5);
    files.push_back(ladder);
    GraphFile ns;
    ns.graph = PointTemporalGraph(3, {{0, 1, 2, 0}, {1, 2, 2, 0}}, true);
    ns.labels.assign(3, "");
    files.push_back(ns);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      GraphFile r;
      r.graph = gen_random_point(7, 25, 20, 4, seed);
      r.labels.assign(7, "");
      files.push_back(r);
    }
    for (const auto& f : files) {
      const auto text = serialize_graph(f);
      const auto back = parse_graph(text);
      CHECK(back.graph == f.graph);
      CHECK(back.labels == f.labels);
      CHECK(back.source == f.source);
      CHECK(back.target == f.target);
      CHECK(back.delta_max == f.delta_max);
      CHECK(serialize_graph(back) == text);
    }
  }
}

TEST_CASE("DIMACS") {
  auto f = parse_dimacs("c a comment\np cnf 3 2\n1 -2 3 0\n-1 2\n -3 0\n");
  CHECK(f.variables == 3);
  CHECK(f.clauses == std::vector<std::vector<int>>{{1, -2, 3}, {-1, 2, -3}});
  CHECK(parse_dimacs(serialize_dimacs(f)).clauses == f.clauses);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 3\n"), ParseError);
}
