#include "macw/table.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "macw/envy.hpp"
#include "macw/mean_cycle.hpp"

namespace macw {

namespace {

std::string node_label(const std::vector<std::size_t>& nodes, char prefix,
                       char separator) {
  std::string out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += separator;
    out += prefix;
    out += std::to_string(nodes[k] + 1);
  }
  return out;
}

// The grids print every cell as total/length, unreduced: -4/2, 6/3, 0/3.
std::string unreduced_cell(const Rational& total, std::size_t length) {
  if (total.is_integer()) {
    return total.str() + "/" + std::to_string(length);
  }
  return "(" + total.str() + ")/" + std::to_string(length);
}

}  // namespace

CycleTable cycle_table(const Instance& instance, const WeightGraph& offset,
                       std::size_t max_n) {
  if (instance.n() != offset.n()) {
    throw std::invalid_argument("instance and offset graph sizes differ");
  }
  const std::size_t n = instance.n();

  CycleTable table;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    Allocation a(perm);
    WeightGraph g = difference_graph(envy_graph(instance, a), offset);
    std::vector<Cycle> cycles = all_cycle_averages(g, max_n);

    if (table.rows.empty()) {
      for (const Cycle& c : cycles) table.columns.push_back(c.nodes);
    }
    std::vector<Rational> totals, averages;
    for (const Cycle& c : cycles) {
      totals.push_back(c.total_weight);
      averages.push_back(c.average_weight);
    }
    std::vector<bool> is_max(cycles.size(), false);
    if (!cycles.empty()) {
      const Rational row_max = *std::max_element(averages.begin(),
                                                 averages.end());
      for (std::size_t c = 0; c < cycles.size(); ++c) {
        is_max[c] = averages[c] == row_max;
      }
    }
    table.rows.push_back(std::move(a));
    table.totals.push_back(std::move(totals));
    table.averages.push_back(std::move(averages));
    table.is_max.push_back(std::move(is_max));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return table;
}

CycleTable cycle_table(const Instance& instance, std::size_t max_n) {
  return cycle_table(instance, WeightGraph(instance.n()), max_n);
}

std::string render_table(const CycleTable& table, TableFormat format) {
  std::ostringstream out;
  const std::size_t n = table.rows.empty() ? 0 : table.rows.front().n();

  if (format == TableFormat::markdown) {
    out << '|';
    for (std::size_t i = 0; i < n; ++i) out << " A" << i + 1 << " |";
    for (const auto& nodes : table.columns) {
      out << " (" << node_label(nodes, 'i', ',') << ") |";
    }
    out << '\n' << '|';
    for (std::size_t c = 0; c < n + table.columns.size(); ++c) out << " --- |";
    out << '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out << '|';
      for (std::size_t i = 0; i < n; ++i) {
        out << " o" << table.rows[r].object_of(i) + 1 << " |";
      }
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const std::string cell =
            unreduced_cell(table.totals[r][c], table.columns[c].size());
        out << ' ' << (table.is_max[r][c] ? "**" + cell + "**" : cell) << " |";
      }
      out << '\n';
    }
    return out.str();
  }

  out << "allocation,cycle,total,length,average,is_max\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << node_label(table.rows[r].assignment(), 'o', ' ') << ','
          << node_label(table.columns[c], 'i', ' ') << ','
          << table.totals[r][c] << ',' << table.columns[c].size() << ','
          << table.averages[r][c] << ',' << (table.is_max[r][c] ? 1 : 0)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace macw
