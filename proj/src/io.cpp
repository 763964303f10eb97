#include "restless/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "restless/errors.hpp"

namespace restless {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> to_u64(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::uint64_t need_u64(std::string_view tok, std::size_t line, const char* what) {
  auto v = to_u64(tok);
  if (!v) {
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return *v;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

struct PendingLabel {
  std::size_t line;
  std::uint64_t id;
  std::string name;
};

}  // namespace

std::size_t GraphFile::node_count() const {
  return std::visit([](const auto& g) { return g.node_count(); }, graph);
}

GraphFile parse_graph(std::string_view text) {
  enum class Kind { none, point, interval } kind = Kind::none;
  std::size_t n = 0;
  bool non_strict = false;
  std::vector<TimedArc> point_arcs;
  std::vector<IntervalTimedArc> interval_arcs;
  std::vector<PendingLabel> labels;
  GraphFile file;
  std::size_t instance_line = 0;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      auto comment = split_ws(line.substr(hash + 1));
      if (comment.size() == 3 && comment[0] == "label") {
        labels.push_back({line_no, need_u64(comment[1], line_no, "label id"),
                          std::string(comment[2])});
      } else if (!comment.empty() && comment[0] == "instance") {
        instance_line = line_no;
        for (std::size_t i = 1; i + 1 < comment.size(); i += 2) {
          auto value = need_u64(comment[i + 1], line_no, "instance field");
          if (comment[i] == "source") {
            file.source = static_cast<NodeId>(value);
          } else if (comment[i] == "target") {
            file.target = static_cast<NodeId>(value);
          } else if (comment[i] == "delta") {
            file.delta_max = value;
          } else {
            throw ParseError(line_no, "unknown instance field '" + std::string(comment[i]) + "'");
          }
        }
      }
      line = line.substr(0, hash);
    }
    auto tok = split_ws(line);
    if (tok.empty()) return;

    if (kind == Kind::none) {
      if (tok[0] == "point" && (tok.size() == 2 || (tok.size() == 3 && tok[2] == "nonstrict"))) {
        kind = Kind::point;
        non_strict = tok.size() == 3;
      } else if (tok[0] == "interval" && tok.size() == 2) {
        kind = Kind::interval;
      } else {
        throw ParseError(line_no, "expected header 'point <n> [nonstrict]' or 'interval <n>'");
      }
      n = need_u64(tok[1], line_no, "node count");
      if (n > std::numeric_limits<NodeId>::max()) throw ParseError(line_no, "node count too large");
      return;
    }

    const std::size_t want = kind == Kind::point ? 4 : 5;
    if (tok.size() != want) {
      throw ParseError(line_no, "expected " + std::to_string(want) + " integers per arc, got " +
                                    std::to_string(tok.size()));
    }
    std::vector<std::uint64_t> v;
    for (auto t : tok) v.push_back(need_u64(t, line_no, "arc field"));
    if (v[0] >= n || v[1] >= n) throw ParseError(line_no, "node id out of range");
    const std::uint64_t delta = v.back();
    const std::uint64_t last_departure = v[want - 2];
    if (!checked_add(last_departure, delta)) throw ParseError(line_no, "arrival time overflows");
    if (kind == Kind::point) {
      if (delta == 0 && !non_strict) {
        throw ParseError(line_no, "zero delay needs the 'nonstrict' header token");
      }
      point_arcs.push_back(
          {static_cast<NodeId>(v[0]), static_cast<NodeId>(v[1]), v[2], delta});
    } else {
      if (v[3] < v[2]) throw ParseError(line_no, "interval end before start");
      if (delta == 0) throw ParseError(line_no, "interval arcs need a positive delay");
      interval_arcs.push_back(
          {static_cast<NodeId>(v[0]), static_cast<NodeId>(v[1]), v[2], v[3], delta});
    }
  });

  if (kind == Kind::none) throw ParseError(1, "missing header line");

  if (kind == Kind::point) {
    file.input_was_sorted = std::is_sorted(
        point_arcs.begin(), point_arcs.end(),
        [](const TimedArc& a, const TimedArc& b) { return a.tau < b.tau; });
    file.graph = PointTemporalGraph(n, std::move(point_arcs), non_strict);
  } else {
    file.graph = IntervalTemporalGraph(n, std::move(interval_arcs));
  }

  file.labels.assign(n, "");
  for (const auto& l : labels) {
    if (l.id >= n) throw ParseError(l.line, "label id out of range");
    file.labels[l.id] = l.name;
  }
  for (auto id : {file.source, file.target}) {
    if (id && *id >= n) throw ParseError(instance_line, "instance node id out of range");
  }
  return file;
}

std::string serialize_graph(const GraphFile& file) {
  std::ostringstream os;
  if (file.is_point()) {
    const auto& g = std::get<PointTemporalGraph>(file.graph);
    os << "point " << g.node_count() << (g.non_strict() ? " nonstrict" : "") << "\n";
  } else {
    os << "interval " << file.node_count() << "\n";
  }
  for (std::size_t i = 0; i < file.labels.size(); ++i) {
    if (!file.labels[i].empty()) os << "# label " << i << " " << file.labels[i] << "\n";
  }
  if (file.source || file.target || file.delta_max) {
    os << "# instance";
    if (file.source) os << " source " << *file.source;
    if (file.target) os << " target " << *file.target;
    if (file.delta_max) os << " delta " << *file.delta_max;
    os << "\n";
  }
  if (file.is_point()) {
    for (const auto& a : std::get<PointTemporalGraph>(file.graph).arcs()) {
      os << a.u << " " << a.v << " " << a.tau << " " << a.delta << "\n";
    }
  } else {
    for (const auto& a : std::get<IntervalTemporalGraph>(file.graph).arcs()) {
      os << a.u << " " << a.v << " " << a.tau_start << " " << a.tau_end << " " << a.delta
         << "\n";
    }
  }
  return os.str();
}

std::string serialize_graph(const PointTemporalGraph& g) {
  GraphFile f;
  f.graph = g;
  return serialize_graph(f);
}

std::string serialize_graph(const IntervalTemporalGraph& g) {
  GraphFile f;
  f.graph = g;
  return serialize_graph(f);
}

GraphFile to_graph_file(const PointInstance& inst) {
  GraphFile f;
  f.graph = inst.graph;
  f.labels = inst.labels;
  f.labels.resize(inst.graph.node_count());
  f.source = inst.source;
  f.target = inst.target;
  f.delta_max = inst.delta_max;
  return f;
}

GraphFile to_graph_file(const IntervalInstance& inst) {
  GraphFile f;
  f.graph = inst.graph;
  f.labels = inst.labels;
  f.labels.resize(inst.graph.node_count());
  f.source = inst.source;
  f.target = inst.target;
  f.delta_max = inst.delta_max;
  return f;
}

NodeId resolve_node(const GraphFile& file, std::string_view name) {
  auto it = std::find(file.labels.begin(), file.labels.end(), name);
  if (it != file.labels.end()) return static_cast<NodeId>(it - file.labels.begin());
  if (auto id = to_u64(name); id && *id < file.node_count()) return static_cast<NodeId>(*id);
  throw ParseError(0, "unknown node '" + std::string(name) + "'");
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  std::optional<std::size_t> declared;
  std::vector<int> clause;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    last_line = line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c" || tok[0] == "%") return;
    if (tok[0] == "p") {
      if (declared || tok.size() != 4 || tok[1] != "cnf") {
        throw ParseError(line_no, "expected a single 'p cnf <vars> <clauses>' header");
      }
      f.variables = need_u64(tok[2], line_no, "variable count");
      declared = need_u64(tok[3], line_no, "clause count");
      return;
    }
    if (!declared) throw ParseError(line_no, "clause before 'p cnf' header");
    for (auto t : tok) {
      int lit = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), lit);
      if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ParseError(line_no, "bad literal '" + std::string(t) + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(clause));
        clause.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::abs(lit)) > f.variables) {
        throw ParseError(line_no, "literal " + std::to_string(lit) + " exceeds variable count");
      }
      clause.push_back(lit);
    }
  });
  if (!declared) throw ParseError(last_line, "missing 'p cnf' header");
  if (!clause.empty()) throw ParseError(last_line, "last clause is not terminated by 0");
  if (f.clauses.size() != *declared) {
    throw ParseError(last_line, "header declares " + std::to_string(*declared) +
                                    " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.variables << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) os << lit << " ";
    os << "0\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace restless
