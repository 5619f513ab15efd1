#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "macw/types.hpp"

namespace macw {

// Full cycle-average grid: one row per allocation (lexicographic), one
// column per simple cycle (by length, then node sequence), maxima
// marked per row. Cell values are averages of the envy graph minus the
// offset.
struct CycleTable {
  std::vector<std::vector<std::size_t>> columns;  // cycle node lists
  std::vector<Allocation> rows;
  std::vector<std::vector<Rational>> totals;    // [row][column]
  std::vector<std::vector<Rational>> averages;  // totals / cycle length
  std::vector<std::vector<bool>> is_max;
};

CycleTable cycle_table(const Instance& instance, const WeightGraph& offset,
                       std::size_t max_n = 5);
CycleTable cycle_table(const Instance& instance, std::size_t max_n = 5);

enum class TableFormat { markdown, csv };

// markdown: one column per agent (its object) then per cycle, cells as
// unreduced total/length with row maxima in **bold** — the layout used
// for the n=3 grids this table reproduces. csv: long form, one line per
// (allocation, cycle) with reduced average and an is_max flag.
std::string render_table(const CycleTable& table, TableFormat format);

}  // namespace macw
