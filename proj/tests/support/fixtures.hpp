#pragma once

#include <array>
#include <set>
#include <vector>

#include "macw/types.hpp"

// Shared fixture data. ex1/ex2 mirror fixtures/ex1.json and ex2.json.
//
// Two kinds of expected grids live here:
//   *_expected  — recomputed from the fixture matrices, verified
//                 independently (by hand and by a separate script);
//                 unit tests pin these.
//   *_reference — the externally supplied grids the acceptance gate is
//                 required to compare against. 13 of the 30 cells in
//                 each disagree with the fixture data. They are not
//                 just a different convention: rows 2 and 4 both list
//                 -3/2 for cycle (i1,i3), yet those two allocations
//                 differ exactly by swapping agents 1 and 3's objects,
//                 which forces opposite totals on that 2-cycle. No
//                 valuation matrix can produce the reference grids.
//                 The acceptance gate pins them anyway and reports the
//                 mismatch honestly (see README, "Known-red checks").

namespace fixtures {

inline macw::Instance ex1_instance() {
  using macw::Rational;
  return macw::Instance({{Rational(3), Rational(2), Rational(1)},
                         {Rational(3), Rational(5), Rational(7)},
                         {Rational(7), Rational(8), Rational(9)}});
}

inline macw::WeightGraph ex2_offset() {
  macw::WeightGraph g(3);
  g.set_arc(1, 2, macw::Rational(-2));
  return g;
}

// A pair with a genuinely positive gap: the unique max-value matching
// is (o2,o3,o1) with offset MACW 2/3, while (o3,o1,o2) reaches 1/3.
inline macw::Instance gap_demo_instance() {
  using macw::Rational;
  return macw::Instance({{Rational(4), Rational(8), Rational(9)},
                         {Rational(7), Rational(6), Rational(8)},
                         {Rational(8), Rational(6), Rational(5)}});
}

inline macw::WeightGraph gap_demo_offset() {
  using macw::Rational;
  macw::WeightGraph g(3);
  g.set_arc(0, 1, Rational(-1));
  g.set_arc(0, 2, Rational(-2));
  g.set_arc(1, 0, Rational(-1));
  g.set_arc(1, 2, Rational(-3));
  g.set_arc(2, 1, Rational(4));
  return g;
}

// Row order: allocations lexicographic —
// (o1,o2,o3), (o1,o3,o2), (o2,o1,o3), (o2,o3,o1), (o3,o1,o2), (o3,o2,o1).
// Column order: (i1,i2), (i1,i3), (i2,i3), (i1,i2,i3), (i1,i3,i2).
// Cells are unreduced total/length strings; bold sets hold the column
// indices of each row's maxima.

using Grid = std::array<std::array<const char*, 5>, 6>;
using BoldSets = std::array<std::set<std::size_t>, 6>;

inline const Grid ex1_grid_expected = {{
    {"-3/2", "-4/2", "1/2", "-1/3", "-5/3"},
    {"-6/2", "-2/2", "-1/2", "-5/3", "-4/3"},
    {"3/2", "-2/2", "2/2", "4/3", "-1/3"},
    {"-3/2", "2/2", "-2/2", "-4/3", "1/3"},
    {"6/2", "2/2", "1/2", "5/3", "4/3"},
    {"3/2", "4/2", "-1/2", "1/3", "5/3"},
}};
inline const BoldSets ex1_bold_expected = {{{2}, {2}, {0}, {1}, {0}, {1}}};

inline const Grid ex2_grid_expected = {{
    {"-3/2", "-4/2", "3/2", "1/3", "-5/3"},
    {"-6/2", "-2/2", "1/2", "-3/3", "-4/3"},
    {"3/2", "-2/2", "4/2", "6/3", "-1/3"},
    {"-3/2", "2/2", "0/2", "-2/3", "1/3"},
    {"6/2", "2/2", "3/2", "7/3", "4/3"},
    {"3/2", "4/2", "1/2", "3/3", "5/3"},
}};
inline const BoldSets ex2_bold_expected = {{{2}, {2}, {2, 3}, {1}, {0}, {1}}};

inline const Grid ex1_grid_reference = {{
    {"-3/2", "-4/2", "1/2", "-1/3", "-5/3"},
    {"-6/2", "-3/2", "-1/2", "-5/3", "-4/3"},
    {"3/2", "3/2", "2/2", "4/3", "-1/3"},
    {"-3/2", "-3/2", "-2/2", "-4/3", "1/3"},
    {"5/2", "5/2", "3/2", "6/3", "5/3"},
    {"4/2", "-2/2", "-3/2", "0/3", "4/3"},
}};
inline const BoldSets ex1_bold_reference = {{{2}, {2}, {0, 1}, {4}, {0, 1}, {0}}};

inline const Grid ex2_grid_reference = {{
    {"-3/2", "-4/2", "3/2", "1/3", "-5/3"},
    {"-6/2", "-3/2", "1/2", "-3/3", "-4/3"},
    {"3/2", "3/2", "4/2", "6/3", "-1/3"},
    {"-3/2", "-3/2", "0/2", "-2/3", "1/3"},
    {"5/2", "5/2", "5/2", "8/3", "5/3"},
    {"4/2", "-2/2", "-1/2", "2/3", "4/3"},
}};
inline const BoldSets ex2_bold_reference = {{{2}, {2}, {2, 3}, {4}, {3}, {0}}};

inline const std::array<const char*, 6> allocation_labels = {
    "(o1,o2,o3)", "(o1,o3,o2)", "(o2,o1,o3)",
    "(o2,o3,o1)", "(o3,o1,o2)", "(o3,o2,o1)",
};

inline const std::array<const char*, 5> cycle_labels = {
    "(i1,i2)", "(i1,i3)", "(i2,i3)", "(i1,i2,i3)", "(i1,i3,i2)",
};

}  // namespace fixtures
