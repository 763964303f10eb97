#include "restless/reach.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "restless/errors.hpp"

namespace restless {

std::vector<NodeId> ReachResult::reachable_nodes() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < reachable.size(); ++v) {
    if (reachable[v]) out.push_back(v);
  }
  return out;
}

TemporalPath retrieve_path(const ReachResult& result, const PointTemporalGraph& g, NodeId s,
                           NodeId v, Time delta_max, std::size_t* parent_lookups) {
  if (!result.has_records) {
    throw RetrievalMisuseError("result was computed without path records");
  }
  if (s != result.source || delta_max != result.delta_max) {
    throw RetrievalMisuseError("result was computed for a different source or waiting bound");
  }
  if (v >= g.node_count() || v >= result.reachable.size()) {
    throw RetrievalMisuseError("node " + std::to_string(v) + " is out of range");
  }
  if (!result.reachable[v]) {
    throw NoPathError("no restless path from " + std::to_string(s) + " to " +
                      std::to_string(v));
  }

  std::size_t lookups = 0;
  TemporalPath path;
  if (v != s) {
    const auto& anchor = result.arr[v];
    if (!anchor) throw RetrievalMisuseError("missing arrival anchor for reachable node");
    TraceKey key{v, anchor->arrival, anchor->trace};
    while (key.node != s) {
      ++lookups;
      auto it = result.parent.find(key);
      if (it == result.parent.end()) {
        throw std::logic_error("broken parent chain at node " + std::to_string(key.node));
      }
      const auto& link = it->second;
      path.arcs.push_back(
          {link.pred.node, key.node, link.departure, key.arrival - link.departure});
      key = link.pred;
      if (path.arcs.size() > g.node_count()) {
        throw std::logic_error("parent chain longer than the node count");
      }
    }
    std::reverse(path.arcs.begin(), path.arcs.end());
  }
  if (parent_lookups) *parent_lookups = lookups;
  return path;
}

}  // namespace restless
