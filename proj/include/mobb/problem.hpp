#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace mobb {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Objective values and Jacobian (row i = gradient of f_i) at one point.
struct Evaluation {
  Vector values;
  Matrix jacobian;
};

/// Immutable description of an unconstrained multiobjective problem.
///
/// The box [lower, upper] is only used to sample starting points; evaluation
/// is defined on all of R^n.
class Problem {
 public:
  /// Writes f(x) into `values` (length m) and the m x n Jacobian into `jac`.
  /// Both outputs are presized by the caller.
  using Evaluator =
      std::function<void(const Vector& x, Vector& values, Matrix& jac)>;

  Problem(std::string name, int num_objectives, int dim, Vector lower,
          Vector upper, bool convex, Evaluator evaluator);

  const std::string& name() const { return name_; }
  int num_objectives() const { return m_; }
  int dim() const { return n_; }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  bool convex() const { return convex_; }

  /// Throws DimensionMismatchError or NonFiniteEvaluationError.
  Evaluation evaluate(const Vector& x) const;
  Vector values(const Vector& x) const { return evaluate(x).values; }
  Matrix jacobian(const Vector& x) const { return evaluate(x).jacobian; }

 private:
  std::string name_;
  int m_;
  int n_;
  Vector lower_;
  Vector upper_;
  bool convex_;
  Evaluator evaluator_;
};

/// Per-run view of a problem that counts objective-vector evaluations.
/// One evaluate() call is one feval regardless of m.
class CountedProblem {
 public:
  explicit CountedProblem(const Problem& problem) : problem_(&problem) {}

  Evaluation evaluate(const Vector& x) {
    ++fevals_;
    return problem_->evaluate(x);
  }
  const Problem& problem() const { return *problem_; }
  std::int64_t fevals() const { return fevals_; }

 private:
  const Problem* problem_;
  std::int64_t fevals_ = 0;
};

/// Registry lookup. Fixed rows use their table names ("BK1", "JOS1c", ...);
/// the scalable families "JOS1", "TOI4", "NT2" and "DD" also accept
/// `variant_dim`. Throws UnknownProblemError / std::invalid_argument.
Problem get_problem(std::string_view name,
                    std::optional<int> variant_dim = std::nullopt);

/// Names of all registered benchmark rows, in catalog order.
const std::vector<std::string>& problem_names();

/// Central finite-difference Jacobian with per-coordinate step
/// h_j = rel_step * (1 + |x_j|).
Matrix finite_difference_jacobian(const Problem& problem, const Vector& x,
                                  double rel_step = 1e-6);

namespace detail {
// Family constructors, one translation unit per group.
Problem make_jos1(std::string name, int n, double bound);
Problem make_toi4(std::string name, int n);
Problem make_nt2(std::string name, int n);
Problem make_dd(std::string name, int n);
Problem make_slcdt1();
Problem make_pnr();
Problem make_mop2();
Problem make_kw2();
Problem make_ff1();
Problem make_deb();
Problem make_bk1();
Problem make_wit();
Problem make_mop5();
Problem make_fds();
Problem make_zkg7();
Problem make_mhhm1();
Problem make_mhhm2();
}  // namespace detail

}  // namespace mobb
