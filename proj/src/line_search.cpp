#include "mobb/line_search.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "mobb/dual.hpp"
#include "mobb/errors.hpp"

namespace mobb {
namespace {

void check_preconditions(const CountedProblem& problem, const Vector& x,
                         const Vector& values_at_x, const Vector& d, double D0,
                         const WolfeParams& params) {
  const Problem& p = problem.problem();
  if (x.size() != p.dim() || d.size() != p.dim() ||
      values_at_x.size() != p.num_objectives()) {
    throw DimensionMismatchError("line search: dimension mismatch");
  }
  if (!(D0 < 0.0)) {
    throw std::invalid_argument("line search: d is not a descent direction");
  }
  if (!(0.0 < params.sigma1 && params.sigma1 < params.sigma2 &&
        params.sigma2 < 1.0)) {
    throw std::invalid_argument("line search: need 0 < sigma1 < sigma2 < 1");
  }
  if (params.max_trials < 1) {
    throw std::invalid_argument("line search: max_trials must be positive");
  }
}

struct Trial {
  bool finite = false;
  Evaluation eval;
};

Trial try_step(CountedProblem& problem, const Vector& x, const Vector& d,
               double t) {
  try {
    return {true, problem.evaluate(x + t * d)};
  } catch (const NonFiniteEvaluationError&) {
    return {};
  }
}

bool sufficient_decrease(const Vector& f_t, const Vector& f_x, double t,
                         double sigma1, double D0) {
  return ((f_t.array() - f_x.array()) <= sigma1 * t * D0).all();
}

}  // namespace

LineSearchResult wolfe_search(CountedProblem& problem, const Vector& x,
                              const Vector& values_at_x, const Vector& d,
                              double D0, const WolfeParams& params) {
  check_preconditions(problem, x, values_at_x, d, D0, params);

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  double t = 1.0;
  std::optional<LineSearchResult> best_decrease;

  for (int trial = 1; trial <= params.max_trials; ++trial) {
    Trial step = try_step(problem, x, d, t);
    const bool decrease =
        step.finite && sufficient_decrease(step.eval.values, values_at_x, t,
                                           params.sigma1, D0);
    if (!decrease) {
      hi = t;
    } else {
      const bool curvature =
          directional_max(step.eval.jacobian, d) >= params.sigma2 * D0;
      LineSearchResult r{t, trial, std::move(step.eval.values),
                         std::move(step.eval.jacobian), true, curvature};
      if (curvature) return r;
      lo = t;
      best_decrease = std::move(r);
    }
    t = std::isinf(hi) ? 2.0 * t : 0.5 * (lo + hi);
  }

  if (best_decrease) {
    best_decrease->trials = params.max_trials;
    return *best_decrease;
  }
  throw LineSearchError("wolfe_search: no sufficient-decrease step within " +
                        std::to_string(params.max_trials) + " trials");
}

LineSearchResult armijo_search(CountedProblem& problem, const Vector& x,
                               const Vector& values_at_x, const Vector& d,
                               double D0, const WolfeParams& params) {
  check_preconditions(problem, x, values_at_x, d, D0, params);
  double t = 1.0;
  for (int trial = 1; trial <= params.max_trials; ++trial, t *= 0.5) {
    Trial step = try_step(problem, x, d, t);
    if (step.finite && sufficient_decrease(step.eval.values, values_at_x, t,
                                           params.sigma1, D0)) {
      const bool curvature =
          directional_max(step.eval.jacobian, d) >= params.sigma2 * D0;
      return {t, trial, std::move(step.eval.values),
              std::move(step.eval.jacobian), true, curvature};
    }
  }
  throw LineSearchError("armijo_search: no sufficient-decrease step within " +
                        std::to_string(params.max_trials) + " trials");
}

}  // namespace mobb
