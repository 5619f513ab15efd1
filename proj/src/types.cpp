#include "macw/types.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace macw {

Instance::Instance(std::vector<std::vector<Rational>> values)
    : n_(values.size()), values_(std::move(values)) {
  if (n_ == 0) throw std::invalid_argument("instance must have n >= 1");
  for (std::size_t i = 0; i < n_; ++i) {
    if (values_[i].size() != n_) {
      throw std::invalid_argument("values must be a square matrix, row " +
                                  std::to_string(i + 1) + " has " +
                                  std::to_string(values_[i].size()) +
                                  " entries, expected " + std::to_string(n_));
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (values_[i][j].sign() <= 0) {
        throw std::invalid_argument(
            "values[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
            "]: non-positive value \"" + values_[i][j].str() + "\"");
      }
    }
  }
}

Allocation::Allocation(std::vector<std::size_t> assignment)
    : assignment_(std::move(assignment)), inverse_(assignment_.size()) {
  const std::size_t n = assignment_.size();
  if (n == 0) throw std::invalid_argument("allocation must have n >= 1");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = assignment_[i];
    if (j >= n || seen[j]) {
      throw std::invalid_argument("allocation is not a permutation of 0.." +
                                  std::to_string(n - 1));
    }
    seen[j] = true;
    inverse_[j] = i;
  }
}

Allocation Allocation::identity(std::size_t n) {
  std::vector<std::size_t> a(n);
  std::iota(a.begin(), a.end(), std::size_t{0});
  return Allocation(std::move(a));
}

std::string Allocation::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (i) out += ',';
    out += 'o';
    out += std::to_string(assignment_[i] + 1);
  }
  out += ')';
  return out;
}

WeightGraph::WeightGraph(std::size_t n) : n_(n), weights_(n * n) {
  if (n == 0) throw std::invalid_argument("graph must have n >= 1");
}

WeightGraph::WeightGraph(std::size_t n,
                         std::vector<std::vector<Rational>> weights)
    : WeightGraph(n) {
  if (weights.size() != n) {
    throw std::invalid_argument("weight matrix must have n rows");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i].size() != n) {
      throw std::invalid_argument("weight matrix must be square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        if (weights[i][j].sign() != 0) {
          throw std::invalid_argument("weights[" + std::to_string(i + 1) +
                                      "][" + std::to_string(i + 1) +
                                      "]: diagonal must be zero");
        }
      } else {
        weights_[i * n_ + j] = std::move(weights[i][j]);
      }
    }
  }
}

void WeightGraph::set_arc(std::size_t from, std::size_t to, Rational w) {
  if (from == to) {
    throw std::invalid_argument("cannot set a self-loop weight");
  }
  weights_[from * n_ + to] = std::move(w);
}

std::string Cycle::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += ',';
    out += 'i';
    out += std::to_string(nodes[k] + 1);
  }
  out += ')';
  return out;
}

Cycle make_cycle(const WeightGraph& graph, std::vector<std::size_t> nodes) {
  if (nodes.size() < 2) {
    throw std::invalid_argument("a cycle needs at least 2 nodes");
  }
  auto smallest = std::min_element(nodes.begin(), nodes.end());
  std::rotate(nodes.begin(), smallest, nodes.end());

  Rational total;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    total += graph.arc(nodes[k], nodes[(k + 1) % nodes.size()]);
  }
  Rational average = total / Rational(static_cast<long long>(nodes.size()));
  return Cycle{std::move(nodes), std::move(total), std::move(average)};
}

std::string method_name(SolveMethod method) {
  switch (method) {
    case SolveMethod::zero_offset_matching: return "zero-offset-matching";
    case SolveMethod::exact_enumeration: return "exact-enumeration";
    case SolveMethod::local_search: return "local-search";
  }
  throw std::invalid_argument("unknown solve method");
}

Rational total_value(const Instance& instance, const Allocation& allocation) {
  if (instance.n() != allocation.n()) {
    throw std::invalid_argument("instance and allocation sizes differ");
  }
  Rational sum;
  for (std::size_t i = 0; i < instance.n(); ++i) {
    sum += instance.value(i, allocation.object_of(i));
  }
  return sum;
}

}  // namespace macw
