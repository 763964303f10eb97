#include "restless/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>

#include "restless/errors.hpp"

namespace restless {

ValidationReport validate_exact_34(const CnfFormula& f) {
  ValidationReport report;
  std::vector<std::size_t> occurrences(f.variables + 1, 0);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& clause = f.clauses[j];
    if (clause.size() != 3) {
      report.violations.push_back("clause " + std::to_string(j + 1) + " has " +
                                  std::to_string(clause.size()) + " literals");
    }
    for (int lit : clause) {
      auto var = static_cast<std::size_t>(std::abs(lit));
      if (lit == 0 || var > f.variables) {
        report.violations.push_back("clause " + std::to_string(j + 1) + " has literal " +
                                    std::to_string(lit) + " out of range");
        continue;
      }
      ++occurrences[var];
    }
  }
  for (std::size_t i = 1; i <= f.variables; ++i) {
    if (occurrences[i] != 4) {
      report.violations.push_back("variable " + std::to_string(i) + " occurs " +
                                  std::to_string(occurrences[i]) + " times");
    }
  }
  return report;
}

PointInstance gen_sat_instance(const CnfFormula& f) {
  auto report = validate_exact_34(f);
  if (!report.ok()) throw ValidationError("not an exact (3,4) formula: " + report.summary());

  const std::size_t n = f.variables;
  const std::size_t m = f.clauses.size();
  auto s_node = [](std::size_t i) { return static_cast<NodeId>(i); };
  auto c_node = [&](std::size_t j) { return static_cast<NodeId>(n + 2 + (j - 1)); };
  const std::size_t literal_base = n + 2 + m + 1;
  auto x_node = [&](std::size_t i, std::size_t k, bool negated) {
    return static_cast<NodeId>(literal_base + (negated ? 4 * n : 0) + 4 * (i - 1) + (k - 1));
  };
  const std::size_t node_count = literal_base + 8 * n;

  std::vector<std::string> labels(node_count);
  for (std::size_t i = 0; i <= n + 1; ++i) labels[s_node(i)] = "s_" + std::to_string(i);
  for (std::size_t j = 1; j <= m + 1; ++j) labels[c_node(j)] = "c_" + std::to_string(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= 4; ++k) {
      auto suffix = std::to_string(i) + "^" + std::to_string(k);
      labels[x_node(i, k, false)] = "x_" + suffix;
      labels[x_node(i, k, true)] = "nx_" + suffix;
    }
  }

  std::vector<TimedArc> arcs;
  auto add = [&](NodeId u, NodeId v, std::size_t tau) {
    arcs.push_back({u, v, static_cast<Time>(tau), 1});
  };
  for (std::size_t i = 0; i < n; ++i) {
    add(s_node(i), x_node(i + 1, 1, false), 10 * i);
    add(s_node(i), x_node(i + 1, 1, true), 10 * i);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::size_t tau = 10 * (i - 1) + 2 * k;
      add(x_node(i, k, false), x_node(i, k + 1, false), tau);
      add(x_node(i, k, true), x_node(i, k + 1, true), tau);
    }
    add(x_node(i, 4, false), s_node(i), 10 * i - 2);
    add(x_node(i, 4, true), s_node(i), 10 * i - 2);
  }
  add(s_node(n), s_node(n + 1), 10 * n);
  add(s_node(n + 1), c_node(1), 10 * n + 2);

  std::vector<std::size_t> seen(n + 1, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    for (int lit : f.clauses[j - 1]) {
      const auto var = static_cast<std::size_t>(std::abs(lit));
      const std::size_t k = ++seen[var];
      const NodeId x = x_node(var, k, lit < 0);
      add(c_node(j), x, 10 * n + 4 * j);
      add(x, c_node(j + 1), 10 * n + 4 * j + 2);
    }
  }

  PointInstance inst;
  inst.graph = PointTemporalGraph(node_count, std::move(arcs));
  inst.source = s_node(0);
  inst.target = c_node(m + 1);
  inst.delta_max = 1;
  inst.labels = std::move(labels);
  return inst;
}

namespace {

Time add_or_throw(Time a, Time b) {
  auto r = checked_add(a, b);
  if (!r) throw OverflowError("subset-sum gadget times overflow 64 bits");
  return *r;
}

}  // namespace

SubsetSumSchedule subset_sum_schedule(const std::vector<std::uint64_t>& xs) {
  const std::size_t n = xs.size();
  SubsetSumSchedule sch;
  sch.delay.resize(n + 1);
  sch.sigma.resize(n + 1);
  sch.tau.resize(n + 1);
  sch.delay[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) sch.delay[i] = add_or_throw(sch.delay[i - 1], xs[i - 1]);
  sch.sigma[0] = 0;
  sch.tau[0] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    sch.sigma[i] = add_or_throw(sch.sigma[i - 1], sch.delay[i - 1]);
    sch.tau[i] = add_or_throw(sch.tau[i - 1], sch.delay[i]);
  }
  return sch;
}

IntervalInstance gen_subset_sum_instance(const SubsetSumInstance& inst) {
  for (auto x : inst.xs) {
    if (x == 0) throw ValidationError("subset-sum items must be positive");
  }
  if (inst.target == 0) throw ValidationError("subset-sum target must be positive");

  const std::size_t n = inst.xs.size();
  const auto sch = subset_sum_schedule(inst.xs);
  std::vector<IntervalTimedArc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = static_cast<NodeId>(i);
    arcs.push_back({u, u + 1, sch.sigma[i], sch.tau[i], sch.delay[i]});
    arcs.push_back({u, u + 1, sch.sigma[i], sch.tau[i], sch.delay[i + 1]});
  }
  const Time last = add_or_throw(sch.sigma[n], inst.target);
  add_or_throw(last, 1);
  arcs.push_back({static_cast<NodeId>(n), static_cast<NodeId>(n + 1), last, last, 1});

  IntervalInstance out;
  out.graph = IntervalTemporalGraph(n + 2, std::move(arcs));
  out.source = 0;
  out.target = static_cast<NodeId>(n + 1);
  out.delta_max = 0;
  for (std::size_t i = 0; i <= n; ++i) out.labels.push_back(std::to_string(i));
  out.labels.push_back("t");
  return out;
}

PointTemporalGraph gen_ladder(std::size_t k) {
  if (k < 2) throw ValidationError("ladder needs at least two rungs");
  auto u = [](std::size_t i) { return static_cast<NodeId>(i); };
  auto v = [k](std::size_t i) { return static_cast<NodeId>(k + i); };
  std::vector<TimedArc> arcs;
  arcs.reserve(2 * k + 4 * (k - 1));
  for (std::size_t i = 0; i < k; ++i) {
    const Time rung = 2 * i;
    arcs.push_back({u(i), v(i), rung, 1});
    arcs.push_back({v(i), u(i), rung, 1});
    if (i + 1 == k) break;
    const Time rail = 2 * (i + 1);
    arcs.push_back({u(i), u(i + 1), rail, 1});
    arcs.push_back({u(i + 1), u(i), rail, 1});
    arcs.push_back({v(i), v(i + 1), rail, 1});
    arcs.push_back({v(i + 1), v(i), rail, 1});
  }
  return PointTemporalGraph(2 * k, std::move(arcs));
}

std::vector<std::string> ladder_labels(std::size_t k) {
  std::vector<std::string> labels(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = "u_" + std::to_string(i);
    labels[k + i] = "v_" + std::to_string(i);
  }
  return labels;
}

PointInstance gen_ladder_shortcut(std::size_t k) {
  auto ladder = gen_ladder(k);
  std::vector<TimedArc> arcs(ladder.arcs().begin(), ladder.arcs().end());
  const auto w = static_cast<NodeId>(2 * k);
  const auto last = static_cast<NodeId>(k - 1);
  arcs.push_back({0, w, 0, 1});
  arcs.push_back({w, last, 2 * (k - 1), 1});

  PointInstance inst;
  inst.graph = PointTemporalGraph(2 * k + 1, std::move(arcs));
  inst.source = 0;
  inst.target = last;
  inst.delta_max = inst.graph.lifetime();
  inst.labels = ladder_labels(k);
  inst.labels.push_back("w");
  return inst;
}

PointTemporalGraph gen_random_point(std::size_t n, std::size_t m, Time max_time, Time max_delay,
                                    std::uint64_t seed) {
  if (m > 0 && n < 2) throw ValidationError("random graph with arcs needs at least two nodes");
  if (max_delay == 0) throw ValidationError("max_delay must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> tail(0, static_cast<NodeId>(n - 1));
  std::uniform_int_distribution<NodeId> other(0, static_cast<NodeId>(n >= 2 ? n - 2 : 0));
  std::uniform_int_distribution<Time> when(0, max_time);
  std::uniform_int_distribution<Time> delay(1, max_delay);
  std::vector<TimedArc> arcs;
  arcs.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    NodeId u = tail(rng);
    NodeId v = other(rng);
    if (v >= u) ++v;
    Time tau = when(rng);
    arcs.push_back({u, v, tau, delay(rng)});
  }
  return PointTemporalGraph(n, std::move(arcs));
}

CnfFormula gen_random_34sat(std::size_t n, std::uint64_t seed) {
  if (n == 0 || n % 3 != 0) throw ValidationError("variable count must be a positive multiple of 3");
  const std::size_t m = 4 * n / 3;
  std::mt19937_64 rng(seed);

  std::vector<int> slots;
  slots.reserve(4 * n);
  for (std::size_t i = 1; i <= n; ++i) slots.insert(slots.end(), 4, static_cast<int>(i));
  std::shuffle(slots.begin(), slots.end(), rng);

  // Swap a repeated variable out of its clause until every clause is clean.
  auto repeated_slot = [&]() -> std::optional<std::size_t> {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t b = 3 * j;
      if (slots[b] == slots[b + 1] || slots[b] == slots[b + 2]) return b;
      if (slots[b + 1] == slots[b + 2]) return b + 1;
    }
    return std::nullopt;
  };
  std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
  constexpr int kMaxRepairs = 100000;
  int repairs = 0;
  for (auto bad = repeated_slot(); bad; bad = repeated_slot()) {
    if (++repairs > kMaxRepairs) {
      throw Error("could not build an exact (3,4) formula; retry with another seed");
    }
    std::swap(slots[*bad], slots[pick(rng)]);
  }

  std::bernoulli_distribution negate(0.5);
  CnfFormula f;
  f.variables = n;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<int> clause;
    for (std::size_t t = 0; t < 3; ++t) {
      int var = slots[3 * j + t];
      clause.push_back(negate(rng) ? -var : var);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace restless
