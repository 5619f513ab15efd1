#pragma once

#include <vector>

#include "macw/types.hpp"

namespace macw {

// Envy graph of an allocation: arc (i, j) carries
// v_i(object of j) - v_i(object of i).
WeightGraph envy_graph(const Instance& instance, const Allocation& allocation);

// Arcwise difference a - b of two graphs on the same node set.
WeightGraph difference_graph(const WeightGraph& a, const WeightGraph& b);

// Decomposes the permutation taking `from` to `to` into disjoint cycles,
// each starting at its smallest agent, sorted by that agent. Fixed points
// are dropped. An arc i -> j in a cycle means agent i receives, under
// `to`, the object agent j held under `from` (the orientation of envy
// arcs); applying all the listed switches to `from` produces `to`.
std::vector<std::vector<std::size_t>> cycle_decomposition(
    const Allocation& from, const Allocation& to);

// Applies switch cycles (as produced by cycle_decomposition): along each
// cycle every agent takes the object of the next agent in the cycle.
Allocation apply_switches(
    const Allocation& from,
    const std::vector<std::vector<std::size_t>>& switches);

}  // namespace macw
