#include "macw/solve.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "macw/envy.hpp"
#include "macw/matching.hpp"
#include "macw/random.hpp"

namespace macw {

namespace {

using Candidate = std::pair<Rational, std::vector<std::size_t>>;

bool is_zero(const WeightGraph& offset) {
  return offset == WeightGraph(offset.n());
}

void check_sizes(const Instance& instance, const WeightGraph& offset) {
  if (instance.n() != offset.n()) {
    throw std::invalid_argument("instance and offset graph sizes differ");
  }
}

Rational objective(const Instance& instance, const Allocation& allocation,
                   const WeightGraph& offset) {
  return offset_macw(instance, allocation, offset).value;
}

Solution finish(const Instance& instance, Allocation allocation,
                const WeightGraph& offset, SolveMethod method, bool optimal) {
  MeanCycleResult r = offset_macw(instance, allocation, offset);
  Rational total = total_value(instance, allocation);
  return Solution{std::move(allocation), std::move(r.value),
                  std::move(r.witness), std::move(total), method, optimal};
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// rank-th permutation of 0..n-1 in lexicographic order.
std::vector<std::size_t> unrank_permutation(std::uint64_t rank,
                                            std::size_t n) {
  std::vector<std::uint64_t> fact(n, 1);
  for (std::size_t i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});

  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t f = fact[i - 1];
    const std::size_t d = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

// Best allocation among `count` consecutive permutations starting at
// `first`; ties keep the earliest, i.e. lexicographically smallest.
std::optional<Candidate> scan_chunk(const Instance& instance,
                                    const WeightGraph& offset,
                                    std::vector<std::size_t> first,
                                    std::uint64_t count) {
  std::optional<Candidate> best;
  std::vector<std::size_t> perm = std::move(first);
  for (std::uint64_t done = 0; done < count; ++done) {
    Rational value = objective(instance, Allocation(perm), offset);
    if (!best || value < best->first) best = Candidate{std::move(value), perm};
    if (!std::next_permutation(perm.begin(), perm.end())) break;
  }
  return best;
}

}  // namespace

MeanCycleResult offset_macw(const Instance& instance,
                            const Allocation& allocation,
                            const WeightGraph& offset) {
  check_sizes(instance, offset);
  return macw_karp(difference_graph(envy_graph(instance, allocation), offset));
}

Solution solve_zero_offset(const Instance& instance,
                           const WeightGraph& offset) {
  check_sizes(instance, offset);
  Allocation best = max_value_matching(instance);
  return finish(instance, std::move(best), offset,
                SolveMethod::zero_offset_matching, is_zero(offset));
}

Solution solve_zero_offset(const Instance& instance) {
  return solve_zero_offset(instance, WeightGraph(instance.n()));
}

Solution solve_exact(const Instance& instance, const WeightGraph& offset,
                     const ExactOptions& options) {
  check_sizes(instance, offset);
  const std::size_t n = instance.n();
  if (n > options.max_n) {
    throw std::invalid_argument("exact enumeration is capped at n = " +
                                std::to_string(options.max_n) + ", got n = " +
                                std::to_string(n));
  }

  const std::uint64_t total = factorial(n);
  std::size_t threads = options.threads != 0
                            ? options.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<std::size_t>(
      std::min<std::uint64_t>(threads, total));

  std::vector<std::optional<Candidate>> results(threads);
  if (threads == 1) {
    results[0] = scan_chunk(instance, offset,
                            unrank_permutation(0, n), total);
  } else {
    // Contiguous rank ranges: the merge below prefers earlier chunks on
    // ties, which keeps the result identical to the serial scan.
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t c = 0; c < threads; ++c) {
      const std::uint64_t lo = total * c / threads;
      const std::uint64_t hi = total * (c + 1) / threads;
      pool.emplace_back([&, c, lo, hi] {
        try {
          results[c] = scan_chunk(instance, offset,
                                  unrank_permutation(lo, n), hi - lo);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::optional<Candidate> best;
  for (auto& r : results) {
    if (r && (!best || r->first < best->first)) best = std::move(r);
  }
  return finish(instance, Allocation(std::move(best->second)), offset,
                SolveMethod::exact_enumeration, true);
}

Solution solve_exact(const Instance& instance, const ExactOptions& options) {
  return solve_exact(instance, WeightGraph(instance.n()), options);
}

namespace {

// All pairwise swaps plus both directions of every 3-rotation.
std::vector<std::vector<std::size_t>> neighbors(
    const std::vector<std::size_t>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto next = a;
      std::swap(next[i], next[j]);
      out.push_back(std::move(next));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        auto fwd = a;
        fwd[i] = a[j]; fwd[j] = a[k]; fwd[k] = a[i];
        out.push_back(std::move(fwd));
        auto bwd = a;
        bwd[i] = a[k]; bwd[j] = a[i]; bwd[k] = a[j];
        out.push_back(std::move(bwd));
      }
    }
  }
  return out;
}

Candidate descend(const Instance& instance, const WeightGraph& offset,
                  std::vector<std::size_t> start, std::size_t max_iters) {
  std::vector<std::size_t> current = std::move(start);
  Rational current_value = objective(instance, Allocation(current), offset);

  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::optional<Candidate> best;
    for (auto& next : neighbors(current)) {
      Rational value = objective(instance, Allocation(next), offset);
      if (value >= current_value) continue;
      if (!best || value < best->first ||
          (value == best->first && next < best->second)) {
        best = Candidate{std::move(value), std::move(next)};
      }
    }
    if (!best) break;
    current_value = std::move(best->first);
    current = std::move(best->second);
  }
  return Candidate{std::move(current_value), std::move(current)};
}

}  // namespace

Solution solve_local_search(const Instance& instance,
                            const WeightGraph& offset,
                            const LocalSearchParams& params) {
  check_sizes(instance, offset);
  const std::size_t n = instance.n();

  std::vector<std::vector<std::size_t>> starts;
  starts.push_back(max_value_matching(instance).assignment());
  for (std::size_t r = 1; r <= params.restarts; ++r) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rng rng(params.seed + r);
    rng.shuffle(perm);
    starts.push_back(std::move(perm));
  }

  std::optional<Candidate> best;
  for (auto& start : starts) {
    Candidate c = descend(instance, offset, std::move(start),
                          params.max_iters);
    if (!best || c.first < best->first ||
        (c.first == best->first && c.second < best->second)) {
      best = std::move(c);
    }
  }
  return finish(instance, Allocation(std::move(best->second)), offset,
                SolveMethod::local_search, false);
}

Solution solve_local_search(const Instance& instance,
                            const LocalSearchParams& params) {
  return solve_local_search(instance, WeightGraph(instance.n()), params);
}

}  // namespace macw
