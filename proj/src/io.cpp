#include "macw/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace macw {

namespace {

using nlohmann::json;

std::string cell_name(const char* field, std::size_t i, std::size_t j) {
  return std::string(field) + "[" + std::to_string(i + 1) + "][" +
         std::to_string(j + 1) + "]";
}

Rational parse_cell(const json& value, const char* field, std::size_t i,
                    std::size_t j) {
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  if (value.is_number_unsigned()) {
    const auto u = value.get<unsigned long long>();
    return Rational::parse(std::to_string(u));
  }
  if (value.is_number_float()) {
    throw std::invalid_argument(cell_name(field, i, j) +
                                ": write decimals as strings (\"0.5\"), bare "
                                "floats are not accepted");
  }
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(cell_name(field, i, j) + ": " + e.what());
    }
  }
  throw std::invalid_argument(cell_name(field, i, j) +
                              ": expected a number or string");
}

std::vector<std::vector<Rational>> parse_matrix(const json& rows,
                                                const char* field) {
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument(std::string("\"") + field +
                                "\" must be a non-empty array of arrays");
  }
  std::vector<std::vector<Rational>> matrix;
  matrix.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_array()) {
      throw std::invalid_argument(std::string(field) + " row " +
                                  std::to_string(i + 1) + " is not an array");
    }
    std::vector<Rational> out;
    out.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      out.push_back(parse_cell(row[j], field, i, j));
    }
    matrix.push_back(std::move(out));
  }
  return matrix;
}

WeightGraph graph_from_matrix(std::vector<std::vector<Rational>> matrix,
                              const char* field) {
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw std::invalid_argument(std::string(field) + " must be square, row " +
                                  std::to_string(i + 1) + " has " +
                                  std::to_string(matrix[i].size()) +
                                  " entries, expected " + std::to_string(n));
    }
    if (matrix[i][i].sign() != 0) {
      throw std::invalid_argument(cell_name(field, i, i) +
                                  ": diagonal must be zero, got \"" +
                                  matrix[i][i].str() + "\"");
    }
  }
  return WeightGraph(n, std::move(matrix));
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("input is not valid JSON");
  if (!doc.is_object()) throw std::invalid_argument("top level must be a JSON object");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// One row per line, integers bare, everything else quoted — the same
// shape the fixture files use.
void append_matrix(std::string& out, const char* field,
                   const std::vector<std::vector<Rational>>& matrix) {
  out += "  \"";
  out += field;
  out += "\": [\n";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < matrix[i].size(); ++j) {
      if (j) out += ", ";
      const Rational& r = matrix[i][j];
      if (r.is_integer()) {
        out += r.str();
      } else {
        out += '"';
        out += r.str();
        out += '"';
      }
    }
    out += i + 1 < matrix.size() ? "],\n" : "]\n";
  }
  out += "  ]";
}

}  // namespace

ProblemInput parse_problem(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.contains("values")) {
    throw std::invalid_argument("missing \"values\" key");
  }
  Instance instance(parse_matrix(doc["values"], "values"));

  std::optional<WeightGraph> offset;
  if (doc.contains("offset")) {
    WeightGraph g = graph_from_matrix(parse_matrix(doc["offset"], "offset"),
                                      "offset");
    if (g.n() != instance.n()) {
      throw std::invalid_argument("offset is " + std::to_string(g.n()) +
                                  "x" + std::to_string(g.n()) +
                                  " but values is " +
                                  std::to_string(instance.n()) + "x" +
                                  std::to_string(instance.n()));
    }
    offset = std::move(g);
  }
  return ProblemInput{std::move(instance), std::move(offset)};
}

Instance parse_instance(const std::string& text) {
  return parse_problem(text).instance;
}

WeightGraph parse_weight_graph(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.contains("weights")) {
    throw std::invalid_argument("missing \"weights\" key");
  }
  return graph_from_matrix(parse_matrix(doc["weights"], "weights"), "weights");
}

ProblemInput load_problem(const std::string& path) {
  return parse_problem(read_file(path));
}

WeightGraph load_weight_graph(const std::string& path) {
  return parse_weight_graph(read_file(path));
}

std::string problem_to_json(const Instance& instance,
                            const std::optional<WeightGraph>& offset) {
  std::string out = "{\n";
  append_matrix(out, "values", instance.values());
  if (offset) {
    const std::size_t n = offset->n();
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) matrix[i][j] = offset->arc(i, j);
      }
    }
    out += ",\n";
    append_matrix(out, "offset", matrix);
  }
  out += "\n}\n";
  return out;
}

}  // namespace macw
