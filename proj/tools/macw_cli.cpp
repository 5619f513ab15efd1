#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "macw/explore.hpp"
#include "macw/io.hpp"
#include "macw/mean_cycle.hpp"
#include "macw/random.hpp"
#include "macw/solve.hpp"
#include "macw/table.hpp"

namespace {

struct RangeFlag {
  long long lo = 0;
  long long hi = 0;
};

RangeFlag parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("range", "expected lo:hi, got \"" + text + "\"");
  }
  try {
    return RangeFlag{std::stoll(text.substr(0, colon)),
                     std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected lo:hi, got \"" + text + "\"");
  }
}

macw::WeightGraph offset_or_zero(const macw::ProblemInput& problem) {
  if (problem.offset) return *problem.offset;
  return macw::WeightGraph(problem.instance.n());
}

void print_solution(const macw::Solution& s) {
  std::cout << "method: " << macw::method_name(s.method) << '\n'
            << "allocation: " << s.allocation.str() << '\n'
            << "total value: " << s.total_value << '\n'
            << "macw: " << s.macw << '\n';
  if (s.witness) std::cout << "witness: " << s.witness->str() << '\n';
  std::cout << "optimal: " << (s.optimal ? "yes" : "no") << '\n';
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Envy-cycle allocation solver: minimize the maximum average "
               "cycle weight of the (offset) envy graph"};
  app.require_subcommand(1);

  // solve
  std::string solve_input, method = "matching";
  std::size_t max_iters = 100, restarts = 2, threads = 0;
  std::uint64_t seed = 0;
  auto* solve = app.add_subcommand("solve", "Pick an allocation for a problem file");
  solve->add_option("--input", solve_input, "problem JSON file")->required();
  solve->add_option("--method", method, "matching, exact, or local")
      ->envname("MACW_METHOD")
      ->check(CLI::IsMember({"matching", "exact", "local"}));
  solve->add_option("--max-iters", max_iters, "local search iteration cap")
      ->envname("MACW_MAX_ITERS");
  solve->add_option("--restarts", restarts, "local search random restarts")
      ->envname("MACW_RESTARTS");
  solve->add_option("--seed", seed, "local search seed")->envname("MACW_SEED");
  solve->add_option("--threads", threads, "exact solver workers, 0 = all cores")
      ->envname("MACW_THREADS");

  // macw
  std::string graph_input;
  auto* macw_cmd = app.add_subcommand("macw", "Maximum average cycle weight of a raw graph");
  macw_cmd->add_option("--graph", graph_input, "graph JSON file {\"weights\": [[...]]}")
      ->required();

  // table
  std::string table_input, format = "md";
  auto* table_cmd = app.add_subcommand("table", "Cycle-average grid over all allocations");
  table_cmd->add_option("--input", table_input, "problem JSON file")->required();
  table_cmd->add_option("--format", format, "md or csv")
      ->envname("MACW_FORMAT")
      ->check(CLI::IsMember({"md", "csv"}));

  // search
  std::size_t search_n = 4, count = 100;
  std::uint64_t search_seed = 0;
  std::string value_range = "1:9", weight_range = "-9:9", out_path;
  std::size_t search_threads = 0;
  auto* search = app.add_subcommand("search", "Random probe for positive matching gaps");
  search->add_option("--n", search_n, "agents per instance")->envname("MACW_N");
  search->add_option("--count", count, "number of (instance, offset) pairs")
      ->envname("MACW_COUNT");
  search->add_option("--seed", search_seed, "master seed")->envname("MACW_SEED");
  search->add_option("--value-range", value_range, "instance values, lo:hi")
      ->envname("MACW_VALUE_RANGE");
  search->add_option("--weight-range", weight_range, "offset weights, lo:hi")
      ->envname("MACW_WEIGHT_RANGE");
  search->add_option("--threads", search_threads, "exact solver workers")
      ->envname("MACW_THREADS");
  search->add_option("--out", out_path, "write the full CSV report here");

  // gen
  std::size_t gen_n = 3;
  std::uint64_t gen_seed = 0;
  std::string gen_value_range = "1:9", gen_weight_range = "-9:9", gen_out;
  bool with_offset = false;
  auto* gen = app.add_subcommand("gen", "Emit a random problem file");
  gen->add_option("--n", gen_n, "agents")->envname("MACW_N");
  gen->add_option("--seed", gen_seed, "master seed")->envname("MACW_SEED");
  gen->add_option("--value-range", gen_value_range, "instance values, lo:hi")
      ->envname("MACW_VALUE_RANGE");
  gen->add_flag("--offset", with_offset, "also generate an offset graph");
  gen->add_option("--weight-range", gen_weight_range, "offset weights, lo:hi")
      ->envname("MACW_WEIGHT_RANGE");
  gen->add_option("--out", gen_out, "output file, default stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*solve) {
      macw::ProblemInput problem = macw::load_problem(solve_input);
      const macw::WeightGraph offset = offset_or_zero(problem);
      macw::Solution s = [&] {
        if (method == "matching") {
          return macw::solve_zero_offset(problem.instance, offset);
        }
        if (method == "exact") {
          return macw::solve_exact(problem.instance, offset,
                                   macw::ExactOptions{9, threads});
        }
        return macw::solve_local_search(
            problem.instance, offset,
            macw::LocalSearchParams{max_iters, restarts, seed});
      }();
      print_solution(s);
    } else if (*macw_cmd) {
      macw::MeanCycleResult r =
          macw::macw_karp(macw::load_weight_graph(graph_input));
      std::cout << "macw: " << r.value << '\n'
                << "witness: " << r.witness.str() << '\n';
    } else if (*table_cmd) {
      macw::ProblemInput problem = macw::load_problem(table_input);
      macw::CycleTable t =
          macw::cycle_table(problem.instance, offset_or_zero(problem));
      std::cout << macw::render_table(t, format == "md"
                                             ? macw::TableFormat::markdown
                                             : macw::TableFormat::csv);
    } else if (*search) {
      const RangeFlag values = parse_range(value_range);
      const RangeFlag weights = parse_range(weight_range);
      macw::SearchConfig config{search_n, count,      search_seed,
                                values.lo, values.hi, weights.lo,
                                weights.hi, search_threads};
      const std::vector<macw::GapReport> reports = macw::search_gap(config);

      std::size_t positive = 0;
      macw::Rational total_gap;
      for (const auto& r : reports) {
        if (r.gap.sign() > 0) ++positive;
        total_gap += r.gap;
      }
      std::cout << "pairs: " << reports.size() << '\n'
                << "positive gaps: " << positive << '\n';
      if (!reports.empty()) {
        std::cout << "max gap: " << reports.front().gap << '\n'
                  << "mean gap: "
                  << total_gap /
                         macw::Rational(static_cast<long long>(reports.size()))
                  << '\n';
      }
      if (!out_path.empty()) {
        write_out(out_path, macw::gap_reports_csv(reports));
        std::cout << "report: " << out_path << '\n';
      }
    } else if (*gen) {
      const RangeFlag values = parse_range(gen_value_range);
      const RangeFlag weights = parse_range(gen_weight_range);
      macw::Rng master(gen_seed);
      const std::uint64_t instance_seed = master.next_u64();
      const std::uint64_t offset_seed = master.next_u64();
      macw::Instance instance =
          macw::generate_instance(gen_n, instance_seed, values.lo, values.hi);
      std::optional<macw::WeightGraph> offset;
      if (with_offset) {
        offset = macw::generate_offset(gen_n, offset_seed, weights.lo,
                                       weights.hi);
      }
      write_out(gen_out, macw::problem_to_json(instance, offset));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
