#pragma once

#include <optional>
#include <string>

#include "macw/types.hpp"

namespace macw {

// On-disk problem: {"values": [[...]], "offset": [[...]]}. Numbers may
// be JSON integers, decimal strings ("2.75"), or fraction strings
// ("7/3"); bare JSON floats are rejected so nothing is ever rounded.
// "offset" is optional and must have a zero diagonal.
struct ProblemInput {
  Instance instance;
  std::optional<WeightGraph> offset;
};

ProblemInput parse_problem(const std::string& text);
Instance parse_instance(const std::string& text);

// Raw graph file for the macw subcommand: {"weights": [[...]]}.
WeightGraph parse_weight_graph(const std::string& text);

ProblemInput load_problem(const std::string& path);
WeightGraph load_weight_graph(const std::string& path);

// Integral rationals become JSON integers, everything else a string.
std::string problem_to_json(const Instance& instance,
                            const std::optional<WeightGraph>& offset);

}  // namespace macw
