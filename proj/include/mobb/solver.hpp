#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "mobb/dual.hpp"
#include "mobb/line_search.hpp"
#include "mobb/problem.hpp"
#include "mobb/surrogate.hpp"

namespace mobb {

enum class Algorithm { kBBDQN, kMBFGSMO, kSDMO };

/// "bbdqn", "mbfgsmo", "sdmo".
std::string_view to_string(Algorithm algo);
Algorithm parse_algorithm(std::string_view name);

enum class RunStatus {
  kRunning,
  kConverged,
  kMaxIter,
  kLineSearchFail,
  /// Non-finite evaluation or dual solver breakdown.
  kNumericalFail,
};

std::string_view to_string(RunStatus status);

struct SolverConfig {
  Algorithm algorithm = Algorithm::kBBDQN;
  double epsilon = 1e-6;  ///< stop when ||d_k|| < epsilon
  int max_iter = 2000;    ///< cap on RunRecord::iterations
  WolfeParams wolfe;
  SafeguardParams safeguard;
  IntervalPolicy policy = IntervalPolicy::kMidpoint;
  /// SDMO only: backtracking on sufficient decrease instead of Wolfe.
  bool sdmo_armijo_only = false;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

/// Everything recorded about one accepted (or attempted) iteration. The
/// stored values are enough to re-check both step conditions after the fact.
struct IterationTrace {
  int k = 0;
  Vector x;  ///< x_k
  double norm_d = 0;
  double theta = 0;
  double sigma = 0;  ///< surrogate used for d_k (trace(B)/n for M-BFGSMO)
  double omega = 0;  ///< safeguard of this iteration (BB-DQN only)
  double sigma_next = 0;
  double t = 0;
  std::string_view branch;  ///< rule that produced sigma
  Vector f_values;  ///< f(x_k)
  Vector f_next;    ///< f(x_k + t d_k)
  double D0 = 0;      ///< max_i <grad f_i(x_k), d_k>
  double D_next = 0;  ///< max_i <grad f_i(x_k + t d_k), d_k>
  int ls_trials = 0;
};

/// BFGS rank-two update B - (Bs)(Bs)^T / s^T B s + g g^T / s^T g.
/// Requires s^T g > 0 and s^T B s > 0.
Matrix bfgs_update(const Matrix& b, const Vector& s, const Vector& gamma);

using TraceSink = std::function<void(const IterationTrace&)>;

struct RunRecord {
  std::string problem;
  Algorithm algorithm = Algorithm::kBBDQN;
  std::uint64_t seed = 0;
  Vector x0;
  Vector x_final;
  Vector f_final;
  /// Direction subproblems solved, i.e. iterates examined (steps + 1 on
  /// convergence). A start that is already critical has iterations = 1.
  int iterations = 0;
  int steps = 0;  ///< accepted line-search steps
  std::int64_t fevals = 0;
  std::int64_t time_ns = 0;
  RunStatus status = RunStatus::kRunning;
  double final_norm_d = 0;
  double sigma_final = 1;  ///< scalar surrogate at exit (BB-DQN, SDMO)
  int bfgs_resets = 0;     ///< M-BFGSMO Cholesky failures
  std::string message;     ///< failure detail, empty on success

  bool converged() const { return status == RunStatus::kConverged; }
};

RunRecord run_bbdqn(const Problem& problem, const Vector& x0,
                    const SolverConfig& config, const TraceSink& trace = {});
RunRecord run_mbfgsmo(const Problem& problem, const Vector& x0,
                      const SolverConfig& config, const TraceSink& trace = {});
RunRecord run_sdmo(const Problem& problem, const Vector& x0,
                   const SolverConfig& config, const TraceSink& trace = {});

/// Dispatches on config.algorithm.
RunRecord run_solver(const Problem& problem, const Vector& x0,
                     const SolverConfig& config, const TraceSink& trace = {});

/// Writes the header "k,norm_d,theta,sigma,t,branch,f_1,...,f_m".
void write_trace_header(std::ostream& out, int num_objectives);
void write_trace_row(std::ostream& out, const IterationTrace& row);

/// TraceSink that appends CSV rows to `out` (not synchronized).
TraceSink csv_trace_sink(std::ostream& out);

}  // namespace mobb
