#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "restless/cnf.hpp"
#include "restless/model.hpp"

namespace restless {

// Text graph format:
//
//   point <n> [nonstrict]      |   interval <n>
//   u v tau delta              |   u v tau_start tau_end delta
//
// '#' starts a comment. Two comment forms carry data:
//   # label <id> <name>
//   # instance source <id> [target <id>] delta <d>
struct GraphFile {
  std::variant<PointTemporalGraph, IntervalTemporalGraph> graph;
  // One entry per node; empty string when unlabelled.
  std::vector<std::string> labels;
  // False when the point arcs had to be sorted while parsing.
  bool input_was_sorted = true;

  std::optional<NodeId> source;
  std::optional<NodeId> target;
  std::optional<Time> delta_max;

  bool is_point() const noexcept { return graph.index() == 0; }
  std::size_t node_count() const;
};

// Throws ParseError with the offending line number.
GraphFile parse_graph(std::string_view text);

std::string serialize_graph(const GraphFile& file);
std::string serialize_graph(const PointTemporalGraph& g);
std::string serialize_graph(const IntervalTemporalGraph& g);

GraphFile to_graph_file(const PointInstance& inst);
GraphFile to_graph_file(const IntervalInstance& inst);

// Accepts a decimal id or a label; throws ParseError(0, ...) when neither.
NodeId resolve_node(const GraphFile& file, std::string_view name);

// DIMACS CNF: 'c' comment lines, one "p cnf <vars> <clauses>" header, then
// zero-terminated clauses. Clause count must match the header.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& f);

std::string read_file(const std::string& path);

}  // namespace restless
