#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "restless/cnf.hpp"
#include "restless/model.hpp"

namespace restless {

// Exact (3,4)-SAT gadget: uniform delay one, source s_0, target c_{m+1},
// delta_max 1. Reachability of the target equals satisfiability of f.
// Throws ValidationError when f is not exact (3,4).
PointInstance gen_sat_instance(const CnfFormula& f);

struct SubsetSumInstance {
  std::vector<std::uint64_t> xs;
  std::uint64_t target = 0;
};

// Schedule of the subset-sum gadget: delay[i] for i in [0, n] and the
// appearance intervals [sigma[i], tau[i]] for i in [0, n].
struct SubsetSumSchedule {
  std::vector<Time> delay;
  std::vector<Time> sigma;
  std::vector<Time> tau;
};

// Throws OverflowError if any time does not fit in 64 bits.
SubsetSumSchedule subset_sum_schedule(const std::vector<std::uint64_t>& xs);

// Interval gadget on nodes 0..n+1 with source 0, target n+1, delta_max 0.
// A 0-restless path exists iff some subset of xs sums to the target.
IntervalInstance gen_subset_sum_instance(const SubsetSumInstance& inst);

// Ladder of k rungs: u_i = i, v_i = k + i; rung arcs at 2i, rail arcs at
// 2(i+1), both directions, delay one.
PointTemporalGraph gen_ladder(std::size_t k);
std::vector<std::string> ladder_labels(std::size_t k);

// Ladder plus a node w = 2k with arcs (u_0, w, 0) and (w, u_{k-1}, 2(k-1)).
// Source u_0, target u_{k-1}; delta_max is set to the lifetime (no bound).
PointInstance gen_ladder_shortcut(std::size_t k);

// m arcs with uniform endpoints (no self-loops), tau in [0, max_time] and
// delta in [1, max_delay]. Deterministic for a given seed.
PointTemporalGraph gen_random_point(std::size_t n, std::size_t m, Time max_time, Time max_delay,
                                    std::uint64_t seed);

// Random exact (3,4) formula over n variables (n divisible by 3), no clause
// repeating a variable. Throws Error if the slot repair does not converge.
CnfFormula gen_random_34sat(std::size_t n, std::uint64_t seed);

}  // namespace restless
