#pragma once

#include <cstddef>
#include <cstdint>

#include "macw/mean_cycle.hpp"
#include "macw/types.hpp"

namespace macw {

// Objective value of one allocation: MACW of its envy graph minus the
// offset graph.
MeanCycleResult offset_macw(const Instance& instance,
                            const Allocation& allocation,
                            const WeightGraph& offset);

// Takes a max-value matching and reports its objective value. With a
// zero offset this is provably optimal; with any other offset it is
// just a strong starting point and is flagged accordingly.
Solution solve_zero_offset(const Instance& instance,
                           const WeightGraph& offset);
Solution solve_zero_offset(const Instance& instance);

struct ExactOptions {
  std::size_t max_n = 9;   // n! allocations; refuse anything bigger
  std::size_t threads = 0; // 0 = hardware concurrency
};

// Scans every allocation. Ties on the objective go to the
// lexicographically smallest allocation, independent of thread count.
Solution solve_exact(const Instance& instance, const WeightGraph& offset,
                     const ExactOptions& options = {});
Solution solve_exact(const Instance& instance,
                     const ExactOptions& options = {});

struct LocalSearchParams {
  std::size_t max_iters = 100;
  std::size_t restarts = 2;  // random restarts after the warm start
  std::uint64_t seed = 0;
};

// Best-improvement descent over pairwise swaps and both directions of
// three-way rotations, warm-started at a max-value matching, then
// restarted from seeded random allocations. Deterministic for a fixed
// seed. The result is a bound, never marked optimal.
Solution solve_local_search(const Instance& instance,
                            const WeightGraph& offset,
                            const LocalSearchParams& params = {});
Solution solve_local_search(const Instance& instance,
                            const LocalSearchParams& params = {});

}  // namespace macw
