#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mobb/pareto.hpp"
#include "mobb/problem.hpp"
#include "mobb/solver.hpp"

namespace mobb {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of one start: a hash of (master seed, problem name, start index).
/// The algorithm is deliberately not an input, so every algorithm sees the
/// same starting points.
std::uint64_t derive_start_seed(std::uint64_t master_seed,
                                std::string_view problem, std::uint64_t index);

/// `count` points uniform on [lower, upper], from a mt19937_64 stream seeded
/// with `seed`; each coordinate is lower + u (upper - lower) with u built
/// from the top 53 bits of one draw.
std::vector<Vector> sample_initial_points(const Vector& lower,
                                          const Vector& upper, int count,
                                          std::uint64_t seed);
std::vector<Vector> sample_initial_points(const Problem& problem, int count,
                                          std::uint64_t seed);

struct ProblemSpec {
  std::string name;
  std::optional<int> variant_dim;
};

struct ExperimentConfig {
  std::vector<ProblemSpec> problems;
  std::vector<Algorithm> algorithms{Algorithm::kBBDQN, Algorithm::kMBFGSMO};
  int starts_per_problem = 200;
  std::uint64_t master_seed = 7;
  SolverConfig solver;
  /// Worker threads; 0 means min(hardware, MOBB_THREADS).
  int threads = 0;
};

/// One (problem, algorithm) row of the experiment summary.
struct SummaryRow {
  std::string problem;
  Algorithm algorithm = Algorithm::kBBDQN;
  int runs = 0;
  int converged = 0;
  int nf = 0;  ///< runs with status != CONVERGED
  double mean_iter = 0;
  double mean_feval = 0;
  double mean_time_ms = 0;
};

struct ExperimentResult {
  std::vector<RunRecord> records;  ///< ordered by (problem, algorithm, start)
  std::vector<SummaryRow> summary;
};

/// Runs every (problem, algorithm, start) in a worker pool. A run that throws
/// is recorded as NUMERICAL_FAIL and the experiment continues.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                bool include_failures = false);

/// Means over converged runs (or all runs with include_failures); NF counts
/// every non-converged run.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records,
                                  bool include_failures = false);

/// Worker count from MOBB_THREADS (if set and positive), capped by hardware.
int default_thread_count();

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows,
                       bool include_time = true);
void write_summary_markdown(std::ostream& out, const std::vector<SummaryRow>& rows);
void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);

struct FrontFiles {
  std::filesystem::path reference;
  std::filesystem::path proposed;
  std::filesystem::path baseline;
  std::filesystem::path plot_script;
};

/// Writes <problem>_reference.csv, <problem>_bbdqn.csv (converged BB-DQN
/// finals, nondominated), <problem>_baseline.csv (converged finals of all
/// other algorithms, nondominated) and <problem>_plot.py into `out_dir`.
/// Throws std::invalid_argument when records mix problems.
FrontFiles emit_front_data(const Problem& problem,
                           const std::vector<RunRecord>& records,
                           const std::vector<FrontPoint>& reference,
                           const std::filesystem::path& out_dir);

/// Converged final objective vectors of `algo`, nondominated-filtered.
std::vector<FrontPoint> solver_front(const std::vector<RunRecord>& records,
                                     Algorithm algo);

}  // namespace mobb
