#include "macw/matching.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace macw {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Hungarian method with potentials (minimization, 1-based scratch
// arrays, column 0 as the virtual start). Returns column -> row.
struct HungarianOut {
  std::vector<std::size_t> row_of_col;
  std::vector<Rational> u, v;  // u[i] + v[j] <= cost[i][j], tight on matches
};

HungarianOut hungarian_min(const std::vector<std::vector<Rational>>& cost) {
  const std::size_t n = cost.size();
  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      std::optional<Rational> delta;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = std::move(cur);
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  HungarianOut out;
  out.row_of_col.assign(n, npos);
  for (std::size_t j = 1; j <= n; ++j) out.row_of_col[j - 1] = p[j] - 1;
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  return out;
}

// Kuhn augmenting search restricted to allowed arcs and free objects.
bool kuhn_try(std::size_t agent, const std::vector<std::vector<bool>>& allowed,
              const std::vector<bool>& blocked_object,
              std::vector<bool>& visited, std::vector<std::size_t>& agent_of) {
  const std::size_t n = allowed.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (!allowed[agent][j] || blocked_object[j] || visited[j]) continue;
    visited[j] = true;
    if (agent_of[j] == npos ||
        kuhn_try(agent_of[j], allowed, blocked_object, visited, agent_of)) {
      agent_of[j] = agent;
      return true;
    }
  }
  return false;
}

// Can agents first..n-1 all be matched inside `allowed`, avoiding
// blocked objects?
bool feasible_suffix(std::size_t first,
                     const std::vector<std::vector<bool>>& allowed,
                     const std::vector<bool>& blocked_object) {
  const std::size_t n = allowed.size();
  std::vector<std::size_t> agent_of(n, npos);
  for (std::size_t i = first; i < n; ++i) {
    std::vector<bool> visited(n, false);
    if (!kuhn_try(i, allowed, blocked_object, visited, agent_of)) return false;
  }
  return true;
}

void require_small(const Instance& instance, std::size_t max_n) {
  if (instance.n() > max_n) {
    throw std::invalid_argument("matching enumeration is capped at n = " +
                                std::to_string(max_n) + ", got n = " +
                                std::to_string(instance.n()));
  }
}

}  // namespace

MatchingCertificate max_value_matching_certified(const Instance& instance) {
  const std::size_t n = instance.n();
  std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = -instance.value(i, j);
  }
  HungarianOut h = hungarian_min(cost);

  std::vector<Rational> agent_dual(n), object_dual(n);
  for (std::size_t i = 0; i < n; ++i) agent_dual[i] = -h.u[i];
  for (std::size_t j = 0; j < n; ++j) object_dual[j] = -h.v[j];

  // Optimal matchings are exactly the perfect matchings of the tight
  // subgraph; pick the lexicographically smallest one agent by agent.
  std::vector<std::vector<bool>> tight(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tight[i][j] = agent_dual[i] + object_dual[j] == instance.value(i, j);
    }
  }

  std::vector<std::size_t> assignment(n, npos);
  std::vector<bool> taken(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t j = 0; j < n && !placed; ++j) {
      if (!tight[i][j] || taken[j]) continue;
      taken[j] = true;
      if (feasible_suffix(i + 1, tight, taken)) {
        assignment[i] = j;
        placed = true;
      } else {
        taken[j] = false;
      }
    }
    if (!placed) throw std::logic_error("tight subgraph lost its matching");
  }

  return MatchingCertificate{Allocation(std::move(assignment)),
                             std::move(agent_dual), std::move(object_dual)};
}

Allocation max_value_matching(const Instance& instance) {
  return max_value_matching_certified(instance).allocation;
}

Allocation max_value_matching_bruteforce(const Instance& instance,
                                         std::size_t max_n) {
  require_small(instance, max_n);
  const std::size_t n = instance.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  std::vector<std::size_t> best = perm;
  Rational best_value = total_value(instance, Allocation(perm));
  while (std::next_permutation(perm.begin(), perm.end())) {
    Rational value = total_value(instance, Allocation(perm));
    if (value > best_value) {
      best_value = std::move(value);
      best = perm;
    }
  }
  return Allocation(std::move(best));
}

std::vector<Allocation> all_max_value_matchings(const Instance& instance,
                                                std::size_t max_n) {
  require_small(instance, max_n);
  const std::size_t n = instance.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  std::vector<Allocation> best;
  std::optional<Rational> best_value;
  do {
    Allocation a(perm);
    Rational value = total_value(instance, a);
    if (!best_value || value > *best_value) {
      best_value = std::move(value);
      best.clear();
      best.push_back(std::move(a));
    } else if (value == *best_value) {
      best.push_back(std::move(a));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace macw
