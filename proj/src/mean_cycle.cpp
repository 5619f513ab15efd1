#include "macw/mean_cycle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace macw {

namespace {

void require_cycles(const WeightGraph& graph) {
  if (graph.n() < 2) {
    throw std::invalid_argument("no cycles exist in a single-node graph");
  }
}

void require_small(const WeightGraph& graph, std::size_t max_n,
                   const char* what) {
  if (graph.n() > max_n) {
    throw std::invalid_argument(std::string(what) + " is capped at n = " +
                                std::to_string(max_n) + ", got n = " +
                                std::to_string(graph.n()));
  }
}

// All simple cycles, each rotated to start at its smallest node, sorted
// by (length, node sequence). Every ordered subset {start, rest...} with
// start minimal closes into a cycle because the graph is complete.
void extend(const WeightGraph& graph, std::vector<std::size_t>& path,
            std::vector<bool>& used, std::vector<Cycle>& out) {
  if (path.size() >= 2) out.push_back(make_cycle(graph, path));
  for (std::size_t v = path.front() + 1; v < graph.n(); ++v) {
    if (used[v]) continue;
    used[v] = true;
    path.push_back(v);
    extend(graph, path, used, out);
    path.pop_back();
    used[v] = false;
  }
}

std::vector<Cycle> enumerate_simple_cycles(const WeightGraph& graph) {
  std::vector<Cycle> out;
  std::vector<bool> used(graph.n(), false);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start + 1 < graph.n(); ++start) {
    used[start] = true;
    path.push_back(start);
    extend(graph, path, used, out);
    path.pop_back();
    used[start] = false;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.nodes.size() != b.nodes.size()) {
      return a.nodes.size() < b.nodes.size();
    }
    return a.nodes < b.nodes;
  });
  return out;
}

}  // namespace

MeanCycleResult macw_karp(const WeightGraph& graph) {
  require_cycles(graph);
  const std::size_t n = graph.n();

  // D[k][v] = largest weight of a walk with exactly k arcs from node 0
  // to v; nullopt when no such walk exists.
  std::vector<std::vector<std::optional<Rational>>> D(
      n + 1, std::vector<std::optional<Rational>>(n));
  std::vector<std::vector<std::size_t>> parent(
      n + 1, std::vector<std::size_t>(n, 0));
  D[0][0] = Rational(0);

  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v || !D[k - 1][u]) continue;
        Rational cand = *D[k - 1][u] + graph.arc(u, v);
        if (!D[k][v] || cand > *D[k][v]) {
          D[k][v] = std::move(cand);
          parent[k][v] = u;
        }
      }
    }
  }

  std::optional<Rational> best;
  std::size_t best_v = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!D[n][v]) continue;
    std::optional<Rational> inner;  // min over k of (D_n - D_k)/(n - k)
    for (std::size_t k = 0; k < n; ++k) {
      if (!D[k][v]) continue;
      Rational cand = (*D[n][v] - *D[k][v]) /
                      Rational(static_cast<long long>(n - k));
      if (!inner || cand < *inner) inner = std::move(cand);
    }
    if (inner && (!best || *inner > *best)) {
      best = std::move(inner);
      best_v = v;
    }
  }
  if (!best) throw std::logic_error("no n-arc walk in a complete digraph");

  // The walk behind D[n][best_v] has n+1 nodes, so one repeats; every
  // cycle it contains averages exactly the optimum.
  std::vector<std::size_t> walk(n + 1);
  walk[n] = best_v;
  for (std::size_t k = n; k > 0; --k) walk[k - 1] = parent[k][walk[k]];

  std::vector<std::size_t> first_seen(n, n + 1);
  std::size_t rep_from = 0, rep_to = 0;
  for (std::size_t pos = 0; pos <= n; ++pos) {
    if (first_seen[walk[pos]] != n + 1) {
      rep_from = first_seen[walk[pos]];
      rep_to = pos;
      break;
    }
    first_seen[walk[pos]] = pos;
  }

  Cycle witness = make_cycle(
      graph, std::vector<std::size_t>(walk.begin() + rep_from,
                                      walk.begin() + rep_to));
  if (witness.average_weight != *best) {
    throw std::logic_error("cycle found on the optimal walk is not optimal");
  }
  return MeanCycleResult{std::move(*best), std::move(witness)};
}

MeanCycleResult macw_bruteforce(const WeightGraph& graph, std::size_t max_n) {
  require_cycles(graph);
  require_small(graph, max_n, "cycle enumeration");
  const std::vector<Cycle> cycles = enumerate_simple_cycles(graph);

  std::size_t best = 0;
  for (std::size_t c = 1; c < cycles.size(); ++c) {
    if (cycles[c].average_weight > cycles[best].average_weight) best = c;
  }
  return MeanCycleResult{cycles[best].average_weight, cycles[best]};
}

std::vector<Cycle> all_cycle_averages(const WeightGraph& graph,
                                      std::size_t max_n) {
  require_cycles(graph);
  require_small(graph, max_n, "cycle listing");
  return enumerate_simple_cycles(graph);
}

}  // namespace macw
