#include "macw/envy.hpp"

#include <algorithm>
#include <stdexcept>

namespace macw {

WeightGraph envy_graph(const Instance& instance, const Allocation& allocation) {
  const std::size_t n = instance.n();
  if (allocation.n() != n) {
    throw std::invalid_argument("instance and allocation sizes differ");
  }
  WeightGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& own = instance.value(i, allocation.object_of(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      g.set_arc(i, j, instance.value(i, allocation.object_of(j)) - own);
    }
  }
  return g;
}

WeightGraph difference_graph(const WeightGraph& a, const WeightGraph& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("graphs have different node counts");
  }
  WeightGraph d(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (i == j) continue;
      d.set_arc(i, j, a.arc(i, j) - b.arc(i, j));
    }
  }
  return d;
}

std::vector<std::vector<std::size_t>> cycle_decomposition(
    const Allocation& from, const Allocation& to) {
  const std::size_t n = from.n();
  if (to.n() != n) {
    throw std::invalid_argument("allocations have different sizes");
  }
  // succ(i) = holder, under `from`, of the object agent i gets under `to`.
  std::vector<std::size_t> succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    succ[i] = from.agent_of(to.object_of(i));
  }

  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> visited(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start] || succ[start] == start) {
      visited[start] = true;
      continue;
    }
    std::vector<std::size_t> cycle;
    for (std::size_t cur = start; !visited[cur]; cur = succ[cur]) {
      visited[cur] = true;
      cycle.push_back(cur);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Allocation apply_switches(
    const Allocation& from,
    const std::vector<std::vector<std::size_t>>& switches) {
  std::vector<std::size_t> assignment = from.assignment();
  std::vector<bool> touched(from.n(), false);
  for (const auto& cycle : switches) {
    if (cycle.size() < 2) {
      throw std::invalid_argument("a switch cycle needs at least 2 agents");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t agent = cycle[k];
      if (agent >= from.n() || touched[agent]) {
        throw std::invalid_argument("switch cycles must be disjoint agents");
      }
      touched[agent] = true;
      assignment[agent] = from.object_of(cycle[(k + 1) % cycle.size()]);
    }
  }
  return Allocation(std::move(assignment));
}

}  // namespace macw
