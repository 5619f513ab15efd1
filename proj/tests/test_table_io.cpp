#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "macw/io.hpp"
#include "macw/table.hpp"
#include "support/fixtures.hpp"

using macw::Allocation;
using macw::CycleTable;
using macw::Instance;
using macw::Rational;
using macw::TableFormat;
using macw::WeightGraph;

namespace {

std::string fixture_path(const char* name) {
  return std::string(MACW_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

void check_grid(const CycleTable& table, const fixtures::Grid& grid,
                const fixtures::BoldSets& bold) {
  REQUIRE(table.rows.size() == 6);
  REQUIRE(table.columns.size() == 5);
  for (std::size_t r = 0; r < 6; ++r) {
    CHECK(table.rows[r].str() == fixtures::allocation_labels[r]);
    std::set<std::size_t> maxima;
    for (std::size_t c = 0; c < 5; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      const std::size_t length = table.columns[c].size();
      const std::string cell =
          table.totals[r][c].str() + "/" + std::to_string(length);
      CHECK(cell == grid[r][c]);
      CHECK(table.averages[r][c] * Rational(static_cast<long long>(length)) ==
            table.totals[r][c]);
      if (table.is_max[r][c]) maxima.insert(c);
    }
    CHECK(maxima == bold[r]);
  }
}

}  // namespace

TEST_CASE("parse_problem reads a plain values matrix") {
  const auto p = macw::parse_problem(R"({"values": [[3, 2], [1, 4]]})");
  CHECK(p.instance.n() == 2);
  CHECK(p.instance.value(0, 1) == Rational(2));
  CHECK(p.instance.value(1, 0) == Rational(1));
  CHECK_FALSE(p.offset.has_value());
}

TEST_CASE("cells accept integers, decimal strings, and fraction strings") {
  const auto p =
      macw::parse_problem(R"({"values": [[1, "2.75"], ["7/3", 4]]})");
  CHECK(p.instance.value(0, 0) == Rational(1));
  CHECK(p.instance.value(0, 1) == Rational(11, 4));
  CHECK(p.instance.value(1, 0) == Rational(7, 3));
  CHECK(p.instance.value(1, 1) == Rational(4));
}

TEST_CASE("parse_problem reads an offset graph") {
  const auto p = macw::parse_problem(
      R"({"values": [[3, 2, 1], [3, 5, 7], [7, 8, 9]],
          "offset": [[0, 0, 0], [0, 0, -2], [0, 0, 0]]})");
  REQUIRE(p.offset.has_value());
  CHECK(*p.offset == fixtures::ex2_offset());
  CHECK(p.offset->arc(1, 2) == Rational(-2));
  CHECK(p.offset->arc(2, 1) == Rational(0));
}

TEST_CASE("parse_problem rejects malformed documents") {
  CHECK_THROWS_WITH_AS(macw::parse_problem("definitely not json"),
                       "input is not valid JSON", std::invalid_argument);
  CHECK_THROWS_WITH_AS(macw::parse_problem("[1, 2]"),
                       "top level must be a JSON object",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(macw::parse_problem("{}"), "missing \"values\" key",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(macw::parse_problem(R"({"values": 7})"),
                       "\"values\" must be a non-empty array of arrays",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(macw::parse_problem(R"({"values": []})"),
                       "\"values\" must be a non-empty array of arrays",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(macw::parse_problem(R"({"values": [[1, 2], 3]})"),
                       "values row 2 is not an array", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      macw::parse_problem(R"({"values": [[1, 2, 3], [4, 5, 6]]})"),
      "values must be a square matrix, row 1 has 3 entries, expected 2",
      std::invalid_argument);
}

TEST_CASE("parse_problem rejects bad cells with their coordinates") {
  CHECK_THROWS_WITH_AS(macw::parse_problem(R"({"values": [[1, 0.5]]})"),
                       "values[1][2]: write decimals as strings (\"0.5\"), "
                       "bare floats are not accepted",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(macw::parse_problem(R"({"values": [[1, true]]})"),
                       "values[1][2]: expected a number or string",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(macw::parse_problem(R"({"values": [[1, "abc"]]})"),
                       "values[1][2]: not a rational: \"abc\"",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      macw::parse_problem(R"({"values": [[1, 2], [3, "1/0"]]})"),
      "values[2][2]: zero denominator in \"1/0\"", std::invalid_argument);
  CHECK_THROWS_WITH_AS(macw::parse_problem(R"({"values": [[1, 2], [3, 0]]})"),
                       "values[2][2]: non-positive value \"0\"",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      macw::parse_problem(R"({"values": [[1, "-2"], [3, 4]]})"),
      "values[1][2]: non-positive value \"-2\"", std::invalid_argument);
}

TEST_CASE("parse_problem validates the offset graph") {
  CHECK_THROWS_WITH_AS(
      macw::parse_problem(
          R"({"values": [[1, 2], [3, 4]], "offset": [[1, 0], [0, 0]]})"),
      "offset[1][1]: diagonal must be zero, got \"1\"", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      macw::parse_problem(
          R"({"values": [[1, 2], [3, 4]], "offset": [[0, 1, 2], [0, 0, 0]]})"),
      "offset must be square, row 1 has 3 entries, expected 2",
      std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      macw::parse_problem(
          R"({"values": [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
              "offset": [[0, 1], [2, 0]]})"),
      "offset is 2x2 but values is 3x3", std::invalid_argument);
}

TEST_CASE("parse_weight_graph reads a raw graph") {
  const WeightGraph g =
      macw::parse_weight_graph(R"({"weights": [[0, "-1/2"], [3, 0]]})");
  CHECK(g.n() == 2);
  CHECK(g.arc(0, 1) == Rational(-1, 2));
  CHECK(g.arc(1, 0) == Rational(3));

  CHECK_THROWS_WITH_AS(macw::parse_weight_graph(R"({"values": [[0]]})"),
                       "missing \"weights\" key", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      macw::parse_weight_graph(R"({"weights": [[0, 1], [2, "1/4"]]})"),
      "weights[2][2]: diagonal must be zero, got \"1/4\"",
      std::invalid_argument);
}

TEST_CASE("fixture files load and match the inline fixtures") {
  const auto p1 = macw::load_problem(fixture_path("ex1.json"));
  CHECK(p1.instance.values() == fixtures::ex1_instance().values());
  CHECK_FALSE(p1.offset.has_value());

  const auto p2 = macw::load_problem(fixture_path("ex2.json"));
  CHECK(p2.instance.values() == fixtures::ex1_instance().values());
  REQUIRE(p2.offset.has_value());
  CHECK(*p2.offset == fixtures::ex2_offset());

  CHECK_THROWS_WITH_AS(macw::load_problem(fixture_path("missing.json")),
                       doctest::Contains("cannot open"), std::runtime_error);
}

TEST_CASE("problem_to_json writes the fixture layout") {
  const Instance small({{Rational(1), Rational(1, 2)},
                        {Rational(2), Rational(1)}});
  CHECK(macw::problem_to_json(small, std::nullopt) ==
        "{\n"
        "  \"values\": [\n"
        "    [1, \"1/2\"],\n"
        "    [2, 1]\n"
        "  ]\n"
        "}\n");

  // byte-for-byte round trip through the actual fixture file
  const auto p2 = macw::load_problem(fixture_path("ex2.json"));
  CHECK(macw::problem_to_json(p2.instance, p2.offset) ==
        slurp(fixture_path("ex2.json")));

  const auto reparsed =
      macw::parse_problem(macw::problem_to_json(p2.instance, p2.offset));
  CHECK(reparsed.instance.values() == p2.instance.values());
  CHECK(*reparsed.offset == *p2.offset);
}

TEST_CASE("cycle_table reproduces the zero-offset grid") {
  const CycleTable table = macw::cycle_table(fixtures::ex1_instance());
  const std::vector<std::vector<std::size_t>> columns = {
      {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}, {0, 2, 1}};
  CHECK(table.columns == columns);
  check_grid(table, fixtures::ex1_grid_expected, fixtures::ex1_bold_expected);
}

TEST_CASE("cycle_table applies the offset graph") {
  const CycleTable table =
      macw::cycle_table(fixtures::ex1_instance(), fixtures::ex2_offset());
  check_grid(table, fixtures::ex2_grid_expected, fixtures::ex2_bold_expected);
}

TEST_CASE("markdown rendering matches the reference layout") {
  const CycleTable table = macw::cycle_table(fixtures::ex1_instance());
  const std::string expected =
      "| A1 | A2 | A3 | (i1,i2) | (i1,i3) | (i2,i3) | (i1,i2,i3) | "
      "(i1,i3,i2) |\n"
      "| --- | --- | --- | --- | --- | --- | --- | --- |\n"
      "| o1 | o2 | o3 | -3/2 | -4/2 | **1/2** | -1/3 | -5/3 |\n"
      "| o1 | o3 | o2 | -6/2 | -2/2 | **-1/2** | -5/3 | -4/3 |\n"
      "| o2 | o1 | o3 | **3/2** | -2/2 | 2/2 | 4/3 | -1/3 |\n"
      "| o2 | o3 | o1 | -3/2 | **2/2** | -2/2 | -4/3 | 1/3 |\n"
      "| o3 | o1 | o2 | **6/2** | 2/2 | 1/2 | 5/3 | 4/3 |\n"
      "| o3 | o2 | o1 | 3/2 | **4/2** | -1/2 | 1/3 | 5/3 |\n";
  CHECK(macw::render_table(table, TableFormat::markdown) == expected);
}

TEST_CASE("csv rendering is long form with reduced averages") {
  const CycleTable table = macw::cycle_table(fixtures::ex1_instance());
  const auto lines =
      split_lines(macw::render_table(table, TableFormat::csv));
  REQUIRE(lines.size() == 31);  // header + 6 allocations x 5 cycles
  CHECK(lines[0] == "allocation,cycle,total,length,average,is_max");
  CHECK(lines[1] == "o1 o2 o3,i1 i2,-3,2,-3/2,0");
  CHECK(lines[3] == "o1 o2 o3,i2 i3,1,2,1/2,1");
  CHECK(lines[4] == "o1 o2 o3,i1 i2 i3,-1,3,-1/3,0");
  CHECK(lines[21] == "o3 o1 o2,i1 i2,6,2,3,1");   // average 6/2 reduces
  CHECK(lines[27] == "o3 o2 o1,i1 i3,4,2,2,1");
}

TEST_CASE("non-integer totals render in parentheses") {
  const Instance inst({{Rational(1, 2), Rational(1)},
                       {Rational(1), Rational(3)}});
  const CycleTable table = macw::cycle_table(inst);
  REQUIRE(table.rows.size() == 2);
  REQUIRE(table.columns.size() == 1);
  CHECK(table.totals[0][0] == Rational(-3, 2));
  CHECK(table.totals[1][0] == Rational(3, 2));
  CHECK(table.is_max[0][0]);  // the only cycle is each row's maximum
  CHECK(table.is_max[1][0]);

  const std::string expected =
      "| A1 | A2 | (i1,i2) |\n"
      "| --- | --- | --- |\n"
      "| o1 | o2 | **(-3/2)/2** |\n"
      "| o2 | o1 | **(3/2)/2** |\n";
  CHECK(macw::render_table(table, TableFormat::markdown) == expected);

  const auto lines = split_lines(macw::render_table(table, TableFormat::csv));
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == "o1 o2,i1 i2,-3/2,2,-3/4,1");
  CHECK(lines[2] == "o2 o1,i1 i2,3/2,2,3/4,1");
}

TEST_CASE("cycle_table rejects bad shapes and sizes") {
  CHECK_THROWS_WITH_AS(macw::cycle_table(Instance({{Rational(1)}})),
                       "no cycles exist in a single-node graph",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      macw::cycle_table(fixtures::ex1_instance(), WeightGraph(4)),
      "instance and offset graph sizes differ", std::invalid_argument);

  std::vector<std::vector<Rational>> big(6, std::vector<Rational>(6,
                                                                  Rational(1)));
  CHECK_THROWS_WITH_AS(macw::cycle_table(Instance(big)),
                       "cycle listing is capped at n = 5, got n = 6",
                       std::invalid_argument);
}
