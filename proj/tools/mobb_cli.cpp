// mobb: command-line front end for the solvers, benchmark harness and
// reference-front generation.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mobb/harness.hpp"
#include "mobb/pareto.hpp"
#include "mobb/problem.hpp"
#include "mobb/solver.hpp"

namespace fs = std::filesystem;

namespace {

struct SolverFlags {
  double eps = 1e-6;
  int max_iter = 2000;
  double sigma1 = 1e-4;
  double sigma2 = 0.1;
  int ls_trials = 50;
  double c0 = 1.0;
  double c1 = 1e-3;
  double c2 = 1.0;
  std::string policy = "midpoint";
  bool sdmo_armijo = false;

  void attach(CLI::App* app) {
    app->add_option("--eps", eps, "Stop when ||d_k|| < eps")->capture_default_str();
    app->add_option("--max-iter", max_iter, "Iteration cap")->capture_default_str();
    app->add_option("--sigma1", sigma1, "Sufficient-decrease parameter")->capture_default_str();
    app->add_option("--sigma2", sigma2, "Curvature parameter")->capture_default_str();
    app->add_option("--ls-trials", ls_trials, "Line-search trial budget")->capture_default_str();
    app->add_option("--c0", c0, "Safeguard cap c0 in (0,1]")->capture_default_str();
    app->add_option("--c1", c1, "Safeguard scale c1")->capture_default_str();
    app->add_option("--c2", c2, "Safeguard exponent c2")->capture_default_str();
    app->add_option("--policy", policy, "BB interval choice")
        ->check(CLI::IsMember({"lower", "midpoint", "upper"}))
        ->capture_default_str();
    app->add_flag("--sdmo-armijo", sdmo_armijo,
                  "Backtracking sufficient-decrease search for SDMO");
  }

  mobb::SolverConfig config() const {
    mobb::SolverConfig c;
    c.epsilon = eps;
    c.max_iter = max_iter;
    c.wolfe = {sigma1, sigma2, ls_trials};
    c.safeguard = {c0, c1, c2};
    c.policy = mobb::parse_interval_policy(policy);
    c.sdmo_armijo_only = sdmo_armijo;
    c.validate();
    return c;
  }
};

// "JOS1:300" selects a scalable family at a given dimension.
mobb::ProblemSpec parse_problem_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {text, std::nullopt};
  return {text.substr(0, colon), std::stoi(text.substr(colon + 1))};
}

std::string format_bounds(const mobb::Vector& v) {
  if ((v.array() == v[0]).all()) {
    std::ostringstream os;
    os << v[0];
    return os.str();
  }
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

void write_file(const fs::path& path, const auto& writer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  writer(out);
}

void report(const mobb::ExperimentResult& result, const fs::path& out_dir,
            bool markdown) {
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(out_dir / "records.csv",
               [&](std::ostream& o) { mobb::write_records_csv(o, result.records); });
    write_file(out_dir / "summary.csv",
               [&](std::ostream& o) { mobb::write_summary_csv(o, result.summary); });
  }
  if (markdown) {
    mobb::write_summary_markdown(std::cout, result.summary);
  } else {
    mobb::write_summary_csv(std::cout, result.summary);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiobjective Barzilai-Borwein quasi-Newton solvers and benchmarks"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Multi-start runs of one problem");
  std::string run_problem;
  std::optional<int> run_dim;
  std::string run_algo = "bbdqn";
  int run_starts = 200;
  std::uint64_t run_seed = 7;
  std::string run_out;
  bool run_markdown = false;
  bool run_include_failures = false;
  bool run_trace = false;
  SolverFlags run_flags;
  run->add_option("--problem", run_problem, "Problem name")->required();
  run->add_option("--dim", run_dim, "Dimension for JOS1, TOI4, NT2, DD");
  run->add_option("--algo", run_algo, "Algorithm")
      ->check(CLI::IsMember({"bbdqn", "mbfgsmo", "sdmo"}))
      ->capture_default_str();
  run->add_option("--starts", run_starts, "Random starts")->capture_default_str();
  run->add_option("--seed", run_seed, "Master seed")->capture_default_str();
  run->add_option("--out", run_out, "Output directory for records/summary CSVs");
  run->add_flag("--markdown", run_markdown, "Print the summary as a Markdown table");
  run->add_flag("--include-failures", run_include_failures,
                "Average over all starts instead of converged ones");
  run->add_flag("--trace", run_trace, "Write one per-iteration CSV per start under <out>/traces");
  run_flags.attach(run);

  // table
  auto* table = app.add_subcommand("table", "Table-style statistics over many problems");
  table->set_config("--config", "", "Flat key = value file mirroring the flags");
  std::vector<std::string> table_problems;
  std::vector<std::string> table_algos{"bbdqn", "mbfgsmo"};
  int table_starts = 200;
  std::uint64_t table_seed = 7;
  std::string table_out;
  bool table_markdown = false;
  bool table_include_failures = false;
  SolverFlags table_flags;
  table->add_option("--problems", table_problems,
                    "Problem names (NAME or FAMILY:DIM); default all");
  table->add_option("--algos", table_algos, "Algorithms")
      ->check(CLI::IsMember({"bbdqn", "mbfgsmo", "sdmo"}))
      ->capture_default_str();
  table->add_option("--starts", table_starts, "Random starts per problem")->capture_default_str();
  table->add_option("--seed", table_seed, "Master seed")->capture_default_str();
  table->add_option("--out", table_out, "Output directory");
  table->add_flag("--markdown", table_markdown, "Print as Markdown");
  table->add_flag("--include-failures", table_include_failures,
                  "Average over all starts instead of converged ones");
  table_flags.attach(table);

  // front
  auto* front = app.add_subcommand("front", "Exhaustive-grid reference front and solver fronts");
  std::string front_problem;
  int front_resolution = 500;
  int front_starts = 200;
  std::uint64_t front_seed = 7;
  std::string front_out = "fronts";
  bool reference_only = false;
  SolverFlags front_flags;
  front->add_option("--problem", front_problem, "Problem name (n <= 2)")->required();
  front->add_option("--resolution", front_resolution, "Grid points per axis")->capture_default_str();
  front->add_option("--starts", front_starts, "Random starts per algorithm")->capture_default_str();
  front->add_option("--seed", front_seed, "Master seed")->capture_default_str();
  front->add_option("--out", front_out, "Output directory")->capture_default_str();
  front->add_flag("--reference-only", reference_only, "Skip the solver runs");
  front_flags.attach(front);

  auto* list = app.add_subcommand("list-problems", "Print the problem registry as TSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      std::cout << "name\tm\tn\tlower\tupper\tconvex\n";
      for (const auto& name : mobb::problem_names()) {
        const mobb::Problem p = mobb::get_problem(name);
        std::cout << p.name() << '\t' << p.num_objectives() << '\t' << p.dim()
                  << '\t' << format_bounds(p.lower()) << '\t'
                  << format_bounds(p.upper()) << '\t' << (p.convex() ? 'Y' : 'N')
                  << '\n';
      }
      return 0;
    }

    if (*run) {
      mobb::ExperimentConfig config;
      config.problems = {{run_problem, run_dim}};
      config.algorithms = {mobb::parse_algorithm(run_algo)};
      config.starts_per_problem = run_starts;
      config.master_seed = run_seed;
      config.solver = run_flags.config();
      const mobb::ExperimentResult result =
          mobb::run_experiment(config, run_include_failures);
      report(result, run_out, run_markdown);
      if (run_trace) {
        const fs::path dir = fs::path(run_out.empty() ? "." : run_out) / "traces";
        fs::create_directories(dir);
        const mobb::Problem problem = mobb::get_problem(run_problem, run_dim);
        mobb::SolverConfig solver = config.solver;
        solver.algorithm = config.algorithms.front();
        for (std::size_t s = 0; s < result.records.size(); ++s) {
          write_file(dir / ("start_" + std::to_string(s) + ".csv"), [&](std::ostream& o) {
            mobb::write_trace_header(o, problem.num_objectives());
            mobb::run_solver(problem, result.records[s].x0, solver,
                             mobb::csv_trace_sink(o));
          });
        }
      }
      return 0;
    }

    if (*table) {
      mobb::ExperimentConfig config;
      if (table_problems.empty()) table_problems = mobb::problem_names();
      for (const auto& p : table_problems) config.problems.push_back(parse_problem_spec(p));
      config.algorithms.clear();
      for (const auto& a : table_algos) config.algorithms.push_back(mobb::parse_algorithm(a));
      config.starts_per_problem = table_starts;
      config.master_seed = table_seed;
      config.solver = table_flags.config();
      report(mobb::run_experiment(config, table_include_failures), table_out,
             table_markdown);
      return 0;
    }

    if (*front) {
      const mobb::Problem problem = mobb::get_problem(front_problem);
      const auto reference = mobb::grid_reference_front(problem, front_resolution);
      std::vector<mobb::RunRecord> records;
      if (!reference_only) {
        mobb::ExperimentConfig config;
        config.problems = {{front_problem, std::nullopt}};
        config.starts_per_problem = front_starts;
        config.master_seed = front_seed;
        config.solver = front_flags.config();
        records = mobb::run_experiment(config).records;
      }
      const auto files = mobb::emit_front_data(problem, records, reference, front_out);
      std::cout << "reference front: " << reference.size() << " points -> "
                << files.reference.string() << '\n'
                << "bbdqn front:     " << files.proposed.string() << '\n'
                << "baseline front:  " << files.baseline.string() << '\n'
                << "plot script:     " << files.plot_script.string() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "mobb: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
