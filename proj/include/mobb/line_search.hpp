#pragma once

#include "mobb/problem.hpp"

namespace mobb {

struct WolfeParams {
  double sigma1 = 1e-4;  ///< sufficient decrease
  double sigma2 = 0.1;   ///< curvature, sigma1 < sigma2 < 1
  int max_trials = 50;
};

struct LineSearchResult {
  double t = 0;
  int trials = 0;
  Vector values_at_t;
  Matrix grads_at_t;
  bool satisfied_armijo = false;
  bool satisfied_curvature = false;
};

/// Finds t > 0 with
///   f_i(x + t d) <= f_i(x) + sigma1 t D0   for all i, and
///   max_i <grad f_i(x + t d), d> >= sigma2 D0,
/// where D0 = max_i <grad f_i(x), d> < 0.
///
/// Starts at t = 1, doubles while decrease holds and curvature fails, and
/// bisects once a too-long step has been seen. A trial whose evaluation is
/// non-finite counts as too long. When the trial budget runs out the largest
/// sufficient-decrease trial is returned with satisfied_curvature = false;
/// if there is none, LineSearchError is thrown.
LineSearchResult wolfe_search(CountedProblem& problem, const Vector& x,
                              const Vector& values_at_x, const Vector& d,
                              double D0, const WolfeParams& params = {});

/// Backtracking (halving) search on the sufficient-decrease condition only.
LineSearchResult armijo_search(CountedProblem& problem, const Vector& x,
                               const Vector& values_at_x, const Vector& d,
                               double D0, const WolfeParams& params = {});

}  // namespace mobb
