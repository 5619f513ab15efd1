#pragma once

#include <cstddef>
#include <vector>

#include "macw/types.hpp"

namespace macw {

// Max-value matching plus the dual certificate proving it optimal:
// agent_dual[i] + object_dual[j] >= value(i, j) everywhere, with
// equality on every matched pair.
struct MatchingCertificate {
  Allocation allocation;
  std::vector<Rational> agent_dual;
  std::vector<Rational> object_dual;
};

// Hungarian method on exact rationals, O(n^3), followed by a greedy
// sweep over the tight subgraph so the returned allocation is the
// lexicographically smallest optimum.
MatchingCertificate max_value_matching_certified(const Instance& instance);
Allocation max_value_matching(const Instance& instance);

// Scans every permutation in lexicographic order; first maximum wins,
// so ties break exactly like max_value_matching.
Allocation max_value_matching_bruteforce(const Instance& instance,
                                         std::size_t max_n = 9);

// All optimal matchings, in lexicographic order.
std::vector<Allocation> all_max_value_matchings(const Instance& instance,
                                                std::size_t max_n = 9);

}  // namespace macw
