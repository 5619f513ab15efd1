#include "macw/explore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "macw/matching.hpp"
#include "macw/random.hpp"
#include "macw/solve.hpp"

namespace macw {

namespace {

void check_generator_args(std::size_t n, long long lo, long long hi,
                          bool positive) {
  if (n < 2) throw std::invalid_argument("generation needs n >= 2");
  if (lo > hi) {
    throw std::invalid_argument("empty range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  if (positive && lo <= 0) {
    throw std::invalid_argument("value range must be positive, got lo = " +
                                std::to_string(lo));
  }
}

}  // namespace

Instance generate_instance(std::size_t n, std::uint64_t seed, long long lo,
                           long long hi) {
  check_generator_args(n, lo, hi, true);
  Rng rng(seed);
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      values[i][j] = Rational(rng.in_range(lo, hi));
    }
  }
  return Instance(std::move(values));
}

WeightGraph generate_offset(std::size_t n, std::uint64_t seed, long long lo,
                            long long hi) {
  check_generator_args(n, lo, hi, false);
  Rng rng(seed);
  WeightGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      g.set_arc(i, j, Rational(rng.in_range(lo, hi)));
    }
  }
  return g;
}

GapReport evaluate_pair(const Instance& instance, const WeightGraph& offset,
                        std::size_t threads) {
  Solution exact = solve_exact(instance, offset, ExactOptions{9, threads});

  const std::vector<Allocation> matchings = all_max_value_matchings(instance);
  Rational best_matching = offset_macw(instance, matchings.front(), offset).value;
  for (std::size_t m = 1; m < matchings.size(); ++m) {
    Rational v = offset_macw(instance, matchings[m], offset).value;
    if (v < best_matching) best_matching = std::move(v);
  }

  Rational gap = best_matching - exact.macw;
  return GapReport{0,
                   0,
                   0,
                   instance,
                   offset,
                   std::move(exact.allocation),
                   std::move(exact.macw),
                   std::move(best_matching),
                   std::move(gap)};
}

std::vector<GapReport> search_gap(const SearchConfig& config) {
  Rng master(config.seed);
  std::vector<GapReport> reports;
  reports.reserve(config.count);
  for (std::size_t p = 0; p < config.count; ++p) {
    const std::uint64_t instance_seed = master.next_u64();
    const std::uint64_t offset_seed = master.next_u64();
    Instance instance = generate_instance(config.n, instance_seed,
                                          config.value_lo, config.value_hi);
    WeightGraph offset = generate_offset(config.n, offset_seed,
                                         config.weight_lo, config.weight_hi);
    GapReport report = evaluate_pair(instance, offset, config.threads);
    report.pair_index = p;
    report.instance_seed = instance_seed;
    report.offset_seed = offset_seed;
    reports.push_back(std::move(report));
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const GapReport& a, const GapReport& b) {
                     return a.gap > b.gap;
                   });
  return reports;
}

std::string gap_reports_csv(const std::vector<GapReport>& reports) {
  std::ostringstream out;
  out << "pair,n,instance_seed,offset_seed,exact_allocation,exact_macw,"
         "best_matching_macw,gap\n";
  for (const GapReport& r : reports) {
    out << r.pair_index << ',' << r.instance.n() << ',' << r.instance_seed
        << ',' << r.offset_seed << ',';
    const auto& a = r.exact_allocation.assignment();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) out << ' ';
      out << 'o' << a[i] + 1;
    }
    out << ',' << r.exact_macw << ',' << r.best_matching_macw << ',' << r.gap
        << '\n';
  }
  return out.str();
}

}  // namespace macw
