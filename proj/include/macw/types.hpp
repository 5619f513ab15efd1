#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "macw/rational.hpp"

namespace macw {

// Square valuation matrix: values[i][j] = value agent i places on object j.
// All entries must be strictly positive.
class Instance {
 public:
  explicit Instance(std::vector<std::vector<Rational>> values);

  std::size_t n() const { return n_; }
  const Rational& value(std::size_t agent, std::size_t object) const {
    return values_[agent][object];
  }
  const std::vector<std::vector<Rational>>& values() const { return values_; }

 private:
  std::size_t n_;
  std::vector<std::vector<Rational>> values_;
};

// Permutation of {0, ..., n-1}: assignment[i] is the object given to agent i.
class Allocation {
 public:
  explicit Allocation(std::vector<std::size_t> assignment);

  static Allocation identity(std::size_t n);

  std::size_t n() const { return assignment_.size(); }
  std::size_t object_of(std::size_t agent) const { return assignment_[agent]; }
  std::size_t agent_of(std::size_t object) const { return inverse_[object]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  // "(o2,o3,o1)" — objects listed agent by agent, 1-based.
  std::string str() const;

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.assignment_ == b.assignment_;
  }
  friend bool operator<(const Allocation& a, const Allocation& b) {
    return a.assignment_ < b.assignment_;
  }

 private:
  std::vector<std::size_t> assignment_;
  std::vector<std::size_t> inverse_;
};

// Complete directed graph on n nodes with rational arc weights and a
// fixed zero diagonal. weight(i, i) stays 0 and cannot be set.
class WeightGraph {
 public:
  explicit WeightGraph(std::size_t n);
  WeightGraph(std::size_t n, std::vector<std::vector<Rational>> weights);

  std::size_t n() const { return n_; }
  const Rational& arc(std::size_t from, std::size_t to) const {
    return weights_[from * n_ + to];
  }
  void set_arc(std::size_t from, std::size_t to, Rational w);

  friend bool operator==(const WeightGraph& a, const WeightGraph& b) {
    return a.n_ == b.n_ && a.weights_ == b.weights_;
  }

 private:
  std::size_t n_;
  std::vector<Rational> weights_;
};

// Simple directed cycle, stored starting from its smallest node.
struct Cycle {
  std::vector<std::size_t> nodes;
  Rational total_weight;
  Rational average_weight;

  // "(i1,i3,i2)" — nodes in cycle order, 1-based.
  std::string str() const;

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.nodes == b.nodes;
  }
};

// Rotates nodes so the smallest comes first and fills in the weights.
Cycle make_cycle(const WeightGraph& graph, std::vector<std::size_t> nodes);

enum class SolveMethod { zero_offset_matching, exact_enumeration, local_search };

std::string method_name(SolveMethod method);

struct Solution {
  Allocation allocation;
  Rational macw;
  std::optional<Cycle> witness;
  Rational total_value;
  SolveMethod method;
  bool optimal = false;
};

// Sum of each agent's value for the object they receive.
Rational total_value(const Instance& instance, const Allocation& allocation);

}  // namespace macw
