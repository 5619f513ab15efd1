#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "macw/types.hpp"

namespace macw {

// One (instance, offset) probe: how much better the true optimum is
// than the best max-value matching. gap > 0 certifies that no
// max-value matching is optimal for this pair.
struct GapReport {
  std::size_t pair_index = 0;
  std::uint64_t instance_seed = 0;
  std::uint64_t offset_seed = 0;
  Instance instance;
  WeightGraph offset;
  Allocation exact_allocation;
  Rational exact_macw;
  Rational best_matching_macw;  // min offset MACW over all max-value matchings
  Rational gap;                 // best_matching_macw - exact_macw, always >= 0
};

struct SearchConfig {
  std::size_t n = 4;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  long long value_lo = 1;
  long long value_hi = 9;
  long long weight_lo = -9;
  long long weight_hi = 9;
  std::size_t threads = 0;  // forwarded to the exact solver
};

// Deterministic given (n, seed, range): entries drawn uniformly from
// the integers [lo, hi] by the Rng in macw/random.hpp (mt19937_64,
// rejection sampling), row by row, left to right.
Instance generate_instance(std::size_t n, std::uint64_t seed, long long lo,
                           long long hi);

// Same scheme for off-diagonal arc weights; diagonal stays zero.
WeightGraph generate_offset(std::size_t n, std::uint64_t seed, long long lo,
                            long long hi);

GapReport evaluate_pair(const Instance& instance, const WeightGraph& offset,
                        std::size_t threads = 0);

// count pairs, seeds drawn from Rng(config.seed) (two per pair, instance
// first), evaluated and sorted by descending gap (stable, so equal gaps
// keep generation order).
std::vector<GapReport> search_gap(const SearchConfig& config);

std::string gap_reports_csv(const std::vector<GapReport>& reports);

}  // namespace macw
