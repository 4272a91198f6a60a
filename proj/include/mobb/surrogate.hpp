#pragma once

#include <string_view>

#include "mobb/problem.hpp"

namespace mobb {

/// Which rule produced the current scalar surrogate.
enum class SurrogateBranch {
  kInitial,      ///< B_0 = I
  kBBIntersect,  ///< BB interval meets the safeguard interval
  kBBClamp,      ///< positive curvature but BB interval outside safeguard
  kFallback,     ///< <s, y> <= 0, function-value corrected curvature
};

std::string_view to_string(SurrogateBranch branch);

/// Where to pick the step inside [alpha-, alpha+] ∩ [omega, 1/omega].
enum class IntervalPolicy { kLower, kMidpoint, kUpper };

IntervalPolicy parse_interval_policy(std::string_view name);
std::string_view to_string(IntervalPolicy policy);

struct SafeguardParams {
  double c0 = 1.0;  ///< in (0, 1]
  double c1 = 1e-3;  ///< > 0
  double c2 = 1.0;  ///< > 0
};

/// Lower limit for omega when the gradients vanish.
inline constexpr double kOmegaFloor = 1e-8;

/// Shared scalar Hessian surrogate B = sigma I.
///
/// sigma is a curvature. The BB rules choose a step length alpha and store
/// sigma = 1/alpha; the fallback formula <s, gamma>/<s, s> is already a
/// curvature and is stored directly. After every update sigma lies in
/// [omega, 1/omega].
struct SurrogateState {
  double sigma = 1.0;
  double omega = 1.0;
  Vector last_s;
  Vector last_gamma;
  SurrogateBranch branch = SurrogateBranch::kInitial;
  /// Set when an update was skipped because s = 0.
  bool stagnated = false;
};

/// omega = min{c0, c1 G^c2} with G = max_i ||grad f_i||_2, floored at
/// kOmegaFloor.
double compute_omega(const Matrix& gradients, const SafeguardParams& params = {});

/// One surrogate update from the step s = x_{k+1} - x_k, the aggregated
/// gradient change y = sum_i lambda_i (grad f_i(x_{k+1}) - grad f_i(x_k)),
/// and the objective values before and after the step.
SurrogateState update_sigma(const SurrogateState& state, const Vector& s,
                            const Vector& y, const Vector& lambda,
                            const Vector& f_old, const Vector& f_new,
                            double omega,
                            IntervalPolicy policy = IntervalPolicy::kMidpoint);

/// Function-value modified secant vector gamma = y + m s with
///   m = max{-<s,y>/<s,s>, 0} + sum_i lambda_i (f_old_i - f_new_i).
/// <s, gamma> > 0 whenever the weighted decrease is positive.
Vector modified_secant(const Vector& s, const Vector& y, const Vector& lambda,
                       const Vector& f_old, const Vector& f_new);

}  // namespace mobb
