#include "restless/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "restless/errors.hpp"

namespace restless {

namespace {

std::string describe(const TimedArc& a) {
  std::ostringstream os;
  os << "(" << a.u << "," << a.v << "," << a.tau << "," << a.delta << ")";
  return os.str();
}

std::string describe(const IntervalTimedArc& a) {
  std::ostringstream os;
  os << "(" << a.u << "," << a.v << "," << a.tau_start << "," << a.tau_end << "," << a.delta
     << ")";
  return os.str();
}

bool by_tau(const TimedArc& a, const TimedArc& b) { return a.tau < b.tau; }

bool pairwise_distinct(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  return std::adjacent_find(nodes.begin(), nodes.end()) == nodes.end();
}

}  // namespace

PointTemporalGraph::PointTemporalGraph(std::size_t n, std::vector<TimedArc> arcs,
                                       bool non_strict)
    : n_(n), arcs_(std::move(arcs)), non_strict_(non_strict) {
  std::stable_sort(arcs_.begin(), arcs_.end(), by_tau);
  compute_summary();
}

PointTemporalGraph PointTemporalGraph::unsorted(std::size_t n, std::vector<TimedArc> arcs,
                                                bool non_strict) {
  PointTemporalGraph g;
  g.n_ = n;
  g.arcs_ = std::move(arcs);
  g.non_strict_ = non_strict;
  g.compute_summary();
  return g;
}

void PointTemporalGraph::compute_summary() {
  lifetime_ = 0;
  uniform_delay_one_ = true;
  all_delays_zero_ = true;
  for (const auto& a : arcs_) {
    lifetime_ = std::max(lifetime_, checked_add(a.tau, a.delta).value_or(kTimeMax));
    uniform_delay_one_ = uniform_delay_one_ && a.delta == 1;
    all_delays_zero_ = all_delays_zero_ && a.delta == 0;
  }
  sorted_ = std::is_sorted(arcs_.begin(), arcs_.end(), by_tau);
}

IntervalTemporalGraph::IntervalTemporalGraph(std::size_t n, std::vector<IntervalTimedArc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  for (const auto& a : arcs_) {
    lifetime_ = std::max(lifetime_, checked_add(a.tau_end, a.delta).value_or(kTimeMax));
  }
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate_point_graph(const PointTemporalGraph& g) {
  ValidationReport report;
  if (!g.is_sorted()) report.violations.push_back("arcs not sorted by appearance time");
  for (const auto& a : g.arcs()) {
    if (a.u >= g.node_count() || a.v >= g.node_count()) {
      report.violations.push_back("node id out of range in arc " + describe(a));
    }
    if (a.delta == 0 && !g.non_strict()) {
      report.violations.push_back("zero delay without non-strict flag in arc " + describe(a));
    }
    if (!checked_add(a.tau, a.delta)) {
      report.violations.push_back("arrival time overflows in arc " + describe(a));
    }
  }
  return report;
}

ValidationReport validate_interval_graph(const IntervalTemporalGraph& g) {
  ValidationReport report;
  for (const auto& a : g.arcs()) {
    if (a.u >= g.node_count() || a.v >= g.node_count()) {
      report.violations.push_back("node id out of range in arc " + describe(a));
    }
    if (a.tau_end < a.tau_start) {
      report.violations.push_back("interval end before start in arc " + describe(a));
    }
    if (a.delta == 0) report.violations.push_back("zero delay in arc " + describe(a));
    if (!checked_add(a.tau_end, a.delta)) {
      report.violations.push_back("arrival time overflows in arc " + describe(a));
    }
  }
  return report;
}

void require_valid(const PointTemporalGraph& g) {
  auto report = validate_point_graph(g);
  if (!report.ok()) throw ValidationError("invalid point temporal graph: " + report.summary());
}

void require_valid(const IntervalTemporalGraph& g) {
  auto report = validate_interval_graph(g);
  if (!report.ok()) {
    throw ValidationError("invalid interval temporal graph: " + report.summary());
  }
}

std::vector<NodeId> TemporalPath::nodes(NodeId source) const {
  std::vector<NodeId> out;
  out.reserve(arcs.size() + 1);
  out.push_back(arcs.empty() ? source : arcs.front().u);
  for (const auto& a : arcs) out.push_back(a.v);
  return out;
}

bool check_restless_path(const PointTemporalGraph& g, const TemporalPath& path, NodeId s,
                         NodeId t, Time delta_max) {
  if (!path.empty()) {
    std::vector<TimedArc> sorted(g.arcs().begin(), g.arcs().end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<TimedArc> used = path.arcs;
    std::sort(used.begin(), used.end());
    for (auto it = used.begin(); it != used.end();) {
      auto next = std::upper_bound(it, used.end(), *it);
      auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), *it);
      if (hi - lo < next - it) {
        throw ArcNotInGraphError("timed arc " + describe(*it) + " is not in the graph" +
                                 (lo == hi ? "" : " that many times"));
      }
      it = next;
    }
  }
  if (path.empty()) return s == t;
  const auto& arcs = path.arcs;
  if (arcs.front().u != s || arcs.back().v != t) return false;
  for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
    if (arcs[i].v != arcs[i + 1].u) return false;
    if (arcs[i].arrival() > arcs[i + 1].tau) return false;
    if (!wait_within(arcs[i].arrival(), arcs[i + 1].tau, delta_max)) return false;
  }
  return pairwise_distinct(path.nodes(s));
}

bool check_interval_restless_path(const IntervalTemporalGraph& g,
                                  const IntervalTemporalPath& path, NodeId s, NodeId t,
                                  Time delta_max) {
  for (const auto& a : path.arcs) {
    if (std::find(g.arcs().begin(), g.arcs().end(), a) == g.arcs().end()) {
      throw ArcNotInGraphError("interval arc " + describe(a) + " is not in the graph");
    }
  }
  const auto& arcs = path.arcs;
  const auto& dep = path.departures;
  if (arcs.size() != dep.size()) return false;
  if (arcs.empty()) return s == t;
  if (arcs.front().u != s || arcs.back().v != t) return false;
  std::vector<NodeId> nodes{s};
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (dep[i] < arcs[i].tau_start || dep[i] > arcs[i].tau_end) return false;
    nodes.push_back(arcs[i].v);
    if (i + 1 == arcs.size()) break;
    if (arcs[i].v != arcs[i + 1].u) return false;
    Time arrival = dep[i] + arcs[i].delta;
    if (arrival > dep[i + 1]) return false;
    if (!wait_within(arrival, dep[i + 1], delta_max)) return false;
  }
  return pairwise_distinct(std::move(nodes));
}

StaticDigraph underlying_graph(const PointTemporalGraph& g) {
  StaticDigraph d{g.node_count(), {}};
  d.arcs.reserve(g.arc_count());
  for (const auto& a : g.arcs()) d.arcs.emplace_back(a.u, a.v);
  std::sort(d.arcs.begin(), d.arcs.end());
  d.arcs.erase(std::unique(d.arcs.begin(), d.arcs.end()), d.arcs.end());
  return d;
}

StaticDigraph underlying_graph(const IntervalTemporalGraph& g) {
  StaticDigraph d{g.node_count(), {}};
  d.arcs.reserve(g.arc_count());
  for (const auto& a : g.arcs()) d.arcs.emplace_back(a.u, a.v);
  std::sort(d.arcs.begin(), d.arcs.end());
  d.arcs.erase(std::unique(d.arcs.begin(), d.arcs.end()), d.arcs.end());
  return d;
}

PointTemporalGraph expand_interval_to_point(const IntervalTemporalGraph& g, std::size_t cap) {
  require_valid(g);

  // Union the appearance intervals of each (u, v, delta) class.
  struct Span {
    Time start, end;
    std::size_t source_arc;
  };
  std::map<std::tuple<NodeId, NodeId, Time>, std::vector<Span>> classes;
  for (std::size_t i = 0; i < g.arc_count(); ++i) {
    const auto& a = g.arcs()[i];
    classes[{a.u, a.v, a.delta}].push_back({a.tau_start, a.tau_end, i});
  }

  std::size_t total = 0;
  std::vector<std::pair<std::tuple<NodeId, NodeId, Time>, Span>> merged;
  for (auto& [key, spans] : classes) {
    std::sort(spans.begin(), spans.end(),
              [](const Span& a, const Span& b) { return a.start < b.start; });
    std::vector<Span> out;
    for (const auto& sp : spans) {
      if (!out.empty() && sp.start <= out.back().end) {
        out.back().end = std::max(out.back().end, sp.end);
      } else {
        out.push_back(sp);
      }
    }
    for (const auto& sp : out) {
      Time len = sp.end - sp.start;
      if (len >= cap || total + len + 1 > cap) {
        throw ResourceGuardError("interval expansion exceeds cap of " + std::to_string(cap) +
                                 " point arcs at interval arc " +
                                 describe(g.arcs()[sp.source_arc]));
      }
      total += len + 1;
      merged.emplace_back(key, sp);
    }
  }

  std::vector<TimedArc> arcs;
  arcs.reserve(total);
  for (const auto& [key, sp] : merged) {
    auto [u, v, delta] = key;
    for (Time tau = sp.start;; ++tau) {
      arcs.push_back({u, v, tau, delta});
      if (tau == sp.end) break;
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const TimedArc& a, const TimedArc& b) {
    return std::tie(a.tau, a.u, a.v, a.delta) < std::tie(b.tau, b.u, b.v, b.delta);
  });
  return PointTemporalGraph(g.node_count(), std::move(arcs));
}

IntervalTemporalPath to_interval_path(const IntervalTemporalGraph& g, const TemporalPath& path) {
  IntervalTemporalPath out;
  for (const auto& a : path.arcs) {
    auto it = std::find_if(g.arcs().begin(), g.arcs().end(), [&](const IntervalTimedArc& ia) {
      return ia.u == a.u && ia.v == a.v && ia.delta == a.delta && ia.tau_start <= a.tau &&
             a.tau <= ia.tau_end;
    });
    if (it == g.arcs().end()) {
      throw ArcNotInGraphError("no interval arc covers timed arc " + describe(a));
    }
    out.arcs.push_back(*it);
    out.departures.push_back(a.tau);
  }
  return out;
}

}  // namespace restless
