#pragma once

#include <cstddef>
#include <vector>

#include "macw/types.hpp"

namespace macw {

struct MeanCycleResult {
  Rational value;   // maximum average arc weight over simple cycles
  Cycle witness;    // a cycle attaining it
};

// Karp's characterization, maximum orientation. O(n^3) arc relaxations.
// Requires n >= 2 (a single node has no cycle).
MeanCycleResult macw_karp(const WeightGraph& graph);

// Enumerates every simple cycle and keeps the best average; ties go to
// the shortest cycle, then the lexicographically smallest node sequence.
// Refuses graphs larger than `max_n` (the cycle count explodes).
MeanCycleResult macw_bruteforce(const WeightGraph& graph,
                                std::size_t max_n = 8);

// Every simple cycle with its total and average weight, ordered by
// (length, node sequence). Capped harder than the oracle: the list
// itself is factorial in n.
std::vector<Cycle> all_cycle_averages(const WeightGraph& graph,
                                      std::size_t max_n = 5);

}  // namespace macw
