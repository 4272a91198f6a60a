#include "mobb/solver.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mobb/errors.hpp"

namespace mobb {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kBBDQN: return "bbdqn";
    case Algorithm::kMBFGSMO: return "mbfgsmo";
    case Algorithm::kSDMO: return "sdmo";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "bbdqn" || name == "BB-DQN") return Algorithm::kBBDQN;
  if (name == "mbfgsmo" || name == "M-BFGSMO") return Algorithm::kMBFGSMO;
  if (name == "sdmo" || name == "SDMO") return Algorithm::kSDMO;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kRunning: return "RUNNING";
    case RunStatus::kConverged: return "CONVERGED";
    case RunStatus::kMaxIter: return "MAX_ITER";
    case RunStatus::kLineSearchFail: return "LINE_SEARCH_FAIL";
    case RunStatus::kNumericalFail: return "NUMERICAL_FAIL";
  }
  return "?";
}

void SolverConfig::validate() const {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(0.0 < wolfe.sigma1 && wolfe.sigma1 < wolfe.sigma2 && wolfe.sigma2 < 1.0)) {
    throw std::invalid_argument("need 0 < sigma1 < sigma2 < 1");
  }
  if (wolfe.max_trials < 1) throw std::invalid_argument("max_trials must be >= 1");
  if (!(safeguard.c0 > 0.0 && safeguard.c0 <= 1.0 && safeguard.c1 > 0.0 &&
        safeguard.c2 > 0.0)) {
    throw std::invalid_argument("need c0 in (0,1] and c1, c2 > 0");
  }
}

Matrix bfgs_update(const Matrix& b, const Vector& s, const Vector& gamma) {
  const Vector bs = b * s;
  const double sbs = s.dot(bs);
  const double s_gamma = s.dot(gamma);
  if (!(sbs > 0.0) || !(s_gamma > 0.0)) {
    throw std::invalid_argument("bfgs_update: curvature condition violated");
  }
  Matrix next = b;
  next.noalias() -= (bs * bs.transpose()) / sbs;
  next.noalias() += (gamma * gamma.transpose()) / s_gamma;
  return 0.5 * (next + next.transpose());
}

namespace {

// Shared scalar BB surrogate.
class BBModel {
 public:
  explicit BBModel(const SolverConfig& config) : config_(config) {}

  DualSolution solve(const Matrix& grads) const {
    return solve_dual(grads, state_.sigma);
  }
  void prepare_step(const Matrix& grads) {
    omega_ = compute_omega(grads, config_.safeguard);
  }
  void update(const Vector& s, const Vector& y, const Vector& lambda,
              const Vector& f_old, const Vector& f_new) {
    state_ = update_sigma(state_, s, y, lambda, f_old, f_new, omega_,
                          config_.policy);
  }
  double sigma() const { return state_.sigma; }
  double omega() const { return omega_; }
  std::string_view branch() const { return to_string(state_.branch); }
  int resets() const { return 0; }

 private:
  const SolverConfig& config_;
  SurrogateState state_;
  double omega_ = 1.0;
};

// B = I throughout.
class SteepestModel {
 public:
  explicit SteepestModel(const SolverConfig&) {}
  DualSolution solve(const Matrix& grads) const { return solve_steepest(grads); }
  void prepare_step(const Matrix&) {}
  void update(const Vector&, const Vector&, const Vector&, const Vector&,
              const Vector&) {}
  double sigma() const { return 1.0; }
  double omega() const { return std::numeric_limits<double>::quiet_NaN(); }
  std::string_view branch() const { return "IDENTITY"; }
  int resets() const { return 0; }
};

// Dense shared matrix with a BFGS update on the modified secant pair
// (s, gamma), gamma = y + m s. A failed Cholesky resets B to I.
class BFGSModel {
 public:
  explicit BFGSModel(const SolverConfig&) {}

  DualSolution solve(const Matrix& grads) {
    if (b_.size() == 0) reset(static_cast<int>(grads.cols()));
    return solve_dual_dense(grads, chol_);
  }
  void prepare_step(const Matrix&) {}
  void update(const Vector& s, const Vector& y, const Vector& lambda,
              const Vector& f_old, const Vector& f_new) {
    const Vector gamma = modified_secant(s, y, lambda, f_old, f_new);
    const double s_gamma = s.dot(gamma);
    const Vector bs = b_ * s;
    const double sbs = s.dot(bs);
    if (!(s_gamma > 0.0) || !(sbs > 0.0)) {
      branch_ = "BFGS_SKIP";
      return;
    }
    b_ = bfgs_update(b_, s, gamma);
    chol_.compute(b_);
    branch_ = "BFGS";
    if (chol_.info() != Eigen::Success ||
        !(chol_.matrixLLT().diagonal().minCoeff() > 0.0)) {
      std::cerr << "warning: M-BFGSMO surrogate lost positive definiteness; "
                   "resetting to identity\n";
      reset(static_cast<int>(s.size()));
      branch_ = "BFGS_RESET";
      ++resets_;
    }
  }
  double sigma() const { return b_.size() ? b_.trace() / b_.rows() : 1.0; }
  double omega() const { return std::numeric_limits<double>::quiet_NaN(); }
  std::string_view branch() const { return branch_; }
  int resets() const { return resets_; }

 private:
  void reset(int n) {
    b_ = Matrix::Identity(n, n);
    chol_.compute(b_);
  }

  Matrix b_;
  Eigen::LLT<Matrix> chol_;
  std::string_view branch_ = "INITIAL";
  int resets_ = 0;
};

template <class Model>
RunRecord drive(const Problem& problem, const Vector& x0,
                const SolverConfig& config, const TraceSink& trace) {
  config.validate();
  if (x0.size() != problem.dim()) {
    throw DimensionMismatchError("x0 has length " + std::to_string(x0.size()) +
                                 ", problem " + problem.name() + " needs " +
                                 std::to_string(problem.dim()));
  }
  const bool armijo_only =
      config.algorithm == Algorithm::kSDMO && config.sdmo_armijo_only;

  RunRecord rec;
  rec.problem = problem.name();
  rec.algorithm = config.algorithm;
  rec.x0 = x0;
  rec.x_final = x0;

  const auto start = std::chrono::steady_clock::now();
  CountedProblem counted(problem);
  Model model(config);
  try {
    Evaluation ev = counted.evaluate(x0);
    Vector x = x0;
    rec.f_final = ev.values;
    for (int k = 0;; ++k) {
      const DualSolution dual = model.solve(ev.jacobian);
      const Vector& d = dual.direction;
      rec.final_norm_d = d.norm();
      rec.sigma_final = model.sigma();
      rec.iterations = k + 1;
      if (rec.final_norm_d < config.epsilon) {
        rec.status = RunStatus::kConverged;
        break;
      }
      if (rec.iterations >= config.max_iter) {
        rec.status = RunStatus::kMaxIter;
        break;
      }
      model.prepare_step(ev.jacobian);
      const double D0 = directional_max(ev.jacobian, d);
      if (!(D0 < 0.0)) {
        rec.status = RunStatus::kLineSearchFail;
        rec.message = "direction is not a descent direction";
        break;
      }
      LineSearchResult ls =
          armijo_only
              ? armijo_search(counted, x, ev.values, d, D0, config.wolfe)
              : wolfe_search(counted, x, ev.values, d, D0, config.wolfe);
      if (!armijo_only && !ls.satisfied_curvature) {
        rec.status = RunStatus::kLineSearchFail;
        rec.message = "curvature condition not met within trial budget";
        break;
      }

      IterationTrace row;
      row.k = k;
      row.x = x;
      row.norm_d = rec.final_norm_d;
      row.theta = dual.theta;
      row.sigma = model.sigma();
      row.omega = model.omega();
      row.branch = model.branch();
      row.t = ls.t;
      row.D0 = D0;
      row.D_next = directional_max(ls.grads_at_t, d);
      row.ls_trials = ls.trials;
      row.f_values = ev.values;
      row.f_next = ls.values_at_t;

      const Vector s = ls.t * d;
      const Vector y = (ls.grads_at_t - ev.jacobian).transpose() * dual.lambda;
      model.update(s, y, dual.lambda, ev.values, ls.values_at_t);
      row.sigma_next = model.sigma();
      if (trace) trace(row);

      x += s;
      ev.values = std::move(ls.values_at_t);
      ev.jacobian = std::move(ls.grads_at_t);
      rec.steps = k + 1;
      rec.x_final = x;
      rec.f_final = ev.values;
    }
  } catch (const LineSearchError& e) {
    rec.status = RunStatus::kLineSearchFail;
    rec.message = e.what();
  } catch (const NonFiniteEvaluationError& e) {
    rec.status = RunStatus::kNumericalFail;
    rec.message = e.what();
  } catch (const DualSolverError& e) {
    rec.status = RunStatus::kNumericalFail;
    rec.message = e.what();
  }
  rec.time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  rec.fevals = counted.fevals();
  rec.bfgs_resets = model.resets();
  return rec;
}

}  // namespace

RunRecord run_bbdqn(const Problem& problem, const Vector& x0,
                    const SolverConfig& config, const TraceSink& trace) {
  SolverConfig c = config;
  c.algorithm = Algorithm::kBBDQN;
  return drive<BBModel>(problem, x0, c, trace);
}

RunRecord run_mbfgsmo(const Problem& problem, const Vector& x0,
                      const SolverConfig& config, const TraceSink& trace) {
  SolverConfig c = config;
  c.algorithm = Algorithm::kMBFGSMO;
  return drive<BFGSModel>(problem, x0, c, trace);
}

RunRecord run_sdmo(const Problem& problem, const Vector& x0,
                   const SolverConfig& config, const TraceSink& trace) {
  SolverConfig c = config;
  c.algorithm = Algorithm::kSDMO;
  return drive<SteepestModel>(problem, x0, c, trace);
}

RunRecord run_solver(const Problem& problem, const Vector& x0,
                     const SolverConfig& config, const TraceSink& trace) {
  switch (config.algorithm) {
    case Algorithm::kBBDQN: return run_bbdqn(problem, x0, config, trace);
    case Algorithm::kMBFGSMO: return run_mbfgsmo(problem, x0, config, trace);
    case Algorithm::kSDMO: return run_sdmo(problem, x0, config, trace);
  }
  throw std::invalid_argument("run_solver: unknown algorithm");
}

void write_trace_header(std::ostream& out, int num_objectives) {
  out << "k,norm_d,theta,sigma,t,branch";
  for (int i = 1; i <= num_objectives; ++i) out << ",f_" << i;
  out << '\n';
}

void write_trace_row(std::ostream& out, const IterationTrace& row) {
  const auto old_precision = out.precision(17);
  out << row.k << ',' << row.norm_d << ',' << row.theta << ',' << row.sigma
      << ',' << row.t << ',' << row.branch;
  for (double v : row.f_values) out << ',' << v;
  out << '\n';
  out.precision(old_precision);
}

TraceSink csv_trace_sink(std::ostream& out) {
  return [&out](const IterationTrace& row) { write_trace_row(out, row); };
}

}  // namespace mobb
