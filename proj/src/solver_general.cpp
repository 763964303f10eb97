#include "restless/solver_general.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "restless/errors.hpp"
#include "restless/solver_unit.hpp"

namespace restless {

std::optional<Time> TimeSet::predecessor(Time tau) const {
  auto it = times_.upper_bound(tau);
  if (it == times_.begin()) return std::nullopt;
  return std::prev(it)->first;
}

void TimeSet::erase_below(Time lower) { times_.erase(times_.begin(), times_.lower_bound(lower)); }

void TimeSet::merge(TimeSet&& other) {
  if (other.size() > size()) std::swap(*this, other);
  for (const auto& [t, rel] : other.times_) {
    const std::int32_t mine = rel + other.offset_ - offset_;
    if (times_.try_emplace(t, mine).second) max_rel_ = std::max(max_rel_, mine);
  }
  max_rel_ = std::max(max_rel_, other.max_rel_ + other.offset_ - offset_);
  other.times_.clear();
}

std::size_t TimeSet::max_shrinks() const noexcept {
  return static_cast<std::size_t>(std::max(0, max_rel_ + offset_));
}

std::vector<Time> TimeSet::to_vector() const {
  std::vector<Time> out;
  out.reserve(times_.size());
  for (const auto& [t, rel] : times_) out.push_back(t);
  return out;
}

namespace {

using RenameHook = std::function<void(const Trace& from, const Trace& to, const TimeSet&)>;

void cleanup_delay_impl(GeneralTraceList& entries, Time tau, std::span<const Time> tau_max,
                        std::optional<Time> prune_lower, const RenameHook& on_rename) {
  std::vector<Trace> stale;
  for (const auto& [trace, times] : entries) {
    for (NodeId x : trace) {
      if (tau_max[x] < tau) {
        stale.push_back(trace);
        break;
      }
    }
  }
  for (const auto& trace : stale) {
    auto node = entries.extract(trace);
    Trace restricted = restrict_to_active(trace, tau, tau_max);
    if (on_rename) on_rename(trace, restricted, node.mapped());
    node.mapped().mark_shrunk();
    auto it = entries.find(restricted);
    if (it != entries.end()) {
      it->second.merge(std::move(node.mapped()));
    } else {
      node.key() = std::move(restricted);
      entries.insert(std::move(node));
    }
  }
  if (prune_lower) {
    for (auto it = entries.begin(); it != entries.end();) {
      it->second.erase_below(*prune_lower);
      it = it->second.empty() ? entries.erase(it) : std::next(it);
    }
  }
}

std::optional<Time> prune_bound(bool prune, Time tau, Time delta_max) {
  if (!prune || tau < delta_max) return std::nullopt;
  return tau - delta_max;
}

}  // namespace

void cleanup_delay(GeneralTraceList& entries, Time tau, std::span<const Time> tau_max,
                   std::optional<Time> prune_lower) {
  cleanup_delay_impl(entries, tau, tau_max, prune_lower, {});
}

ReachResult solve_general(const PointTemporalGraph& g, NodeId s, Time delta_max,
                          const GeneralOptions& opts) {
  require_valid(g);
  if (s >= g.node_count()) {
    throw ValidationError("source " + std::to_string(s) + " is out of range");
  }
  for (const auto& a : g.arcs()) {
    if (a.delta == 0) {
      throw ModelMismatchError("general-delay solver needs positive delays");
    }
  }

  const std::size_t n = g.node_count();
  const auto tau_max = latest_activity(g);

  ReachResult result;
  result.source = s;
  result.delta_max = delta_max;
  result.reachable.assign(n, false);
  result.reachable[s] = true;
  result.has_records = opts.record_paths;
  if (opts.record_paths) result.arr.assign(n, std::nullopt);

  std::vector<GeneralTraceList> table(n);
  table[s][Trace{s}];

  NodeId renaming_node = 0;
  RenameHook alias;
  if (opts.record_paths) {
    alias = [&](const Trace& from, const Trace& to, const TimeSet& times) {
      for (Time sigma : times.to_vector()) {
        auto it = result.parent.find(TraceKey{renaming_node, sigma, from});
        if (it == result.parent.end()) continue;
        ParentLink link = it->second;
        result.parent.try_emplace(TraceKey{renaming_node, sigma, to}, std::move(link));
      }
    };
  }

  auto note_sizes = [&](const GeneralTraceList& list) {
    auto& st = result.stats;
    st.peak_table_size = std::max(st.peak_table_size, list.size());
    for (const auto& [trace, times] : list) {
      st.peak_time_set_size = std::max(st.peak_time_set_size, times.size());
      st.max_time_shrinks = std::max(st.max_time_shrinks, times.max_shrinks());
    }
  };

  const auto arcs = g.arcs();
  std::size_t time_index = 0;
  for (std::size_t begin = 0; begin < arcs.size(); ++time_index) {
    const Time tau = arcs[begin].tau;
    std::size_t end = begin;
    while (end < arcs.size() && arcs[end].tau == tau) ++end;

    table[s][Trace{s}].insert(tau);

    for (std::size_t i = begin; i < end; ++i) {
      const auto& a = arcs[i];
      const Time arrival = tau + a.delta;
      auto& target = table[a.v];
      for (const auto& [trace, times] : table[a.u]) {
        auto sigma = times.predecessor(tau);
        if (!sigma || trace_contains(trace, a.v) || !wait_within(*sigma, tau, delta_max)) {
          continue;
        }
        Trace next = restrict_to_active(trace, tau, tau_max);
        trace_insert(next, a.v);
        if (opts.record_paths) {
          result.parent.try_emplace(TraceKey{a.v, arrival, next},
                                    ParentLink{TraceKey{a.u, *sigma, trace}, tau});
          result.arr[a.v] = Anchor{arrival, next};
        }
        target[std::move(next)].insert(arrival);
        result.reachable[a.v] = true;
        ++result.stats.extensions;
      }
      note_sizes(target);
      renaming_node = a.v;
      cleanup_delay_impl(target, tau, tau_max, prune_bound(opts.prune, tau, delta_max), alias);
      note_sizes(target);
    }

    if (opts.on_time_processed) opts.on_time_processed(time_index, tau, table);
    begin = end;
  }
  return result;
}

TemporalPath retrieve_path_general(const ReachResult& result, const PointTemporalGraph& g,
                                   NodeId s, NodeId v, Time delta_max,
                                   std::size_t* parent_lookups) {
  return retrieve_path(result, g, s, v, delta_max, parent_lookups);
}

}  // namespace restless
