#include "mobb/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mobb/errors.hpp"

namespace mobb {

std::string_view to_string(SurrogateBranch branch) {
  switch (branch) {
    case SurrogateBranch::kInitial: return "INITIAL";
    case SurrogateBranch::kBBIntersect: return "BB_INTERSECT";
    case SurrogateBranch::kBBClamp: return "BB_CLAMP";
    case SurrogateBranch::kFallback: return "FALLBACK";
  }
  return "?";
}

IntervalPolicy parse_interval_policy(std::string_view name) {
  if (name == "lower") return IntervalPolicy::kLower;
  if (name == "midpoint") return IntervalPolicy::kMidpoint;
  if (name == "upper") return IntervalPolicy::kUpper;
  throw std::invalid_argument("unknown interval policy: " + std::string(name));
}

std::string_view to_string(IntervalPolicy policy) {
  switch (policy) {
    case IntervalPolicy::kLower: return "lower";
    case IntervalPolicy::kMidpoint: return "midpoint";
    case IntervalPolicy::kUpper: return "upper";
  }
  return "?";
}

double compute_omega(const Matrix& gradients, const SafeguardParams& params) {
  if (!gradients.allFinite()) {
    throw std::invalid_argument("compute_omega: non-finite gradients");
  }
  if (!(params.c0 > 0.0 && params.c0 <= 1.0 && params.c1 > 0.0 &&
        params.c2 > 0.0)) {
    throw std::invalid_argument("compute_omega: need c0 in (0,1], c1, c2 > 0");
  }
  const double g = gradients.rowwise().norm().maxCoeff();
  if (!(g > 0.0)) return kOmegaFloor;
  const double omega = std::min(params.c0, params.c1 * std::pow(g, params.c2));
  return std::max(omega, kOmegaFloor);
}

Vector modified_secant(const Vector& s, const Vector& y, const Vector& lambda,
                       const Vector& f_old, const Vector& f_new) {
  const double ss = s.squaredNorm();
  const double eta = s.dot(y) / ss;
  const double m = std::max(-eta, 0.0) + lambda.dot(f_old - f_new);
  return y + m * s;
}

SurrogateState update_sigma(const SurrogateState& state, const Vector& s,
                            const Vector& y, const Vector& lambda,
                            const Vector& f_old, const Vector& f_new,
                            double omega, IntervalPolicy policy) {
  if (s.size() != y.size() || lambda.size() != f_old.size() ||
      f_old.size() != f_new.size()) {
    throw DimensionMismatchError("update_sigma: dimension mismatch");
  }
  if (!(omega > 0.0 && omega <= 1.0)) {
    throw std::invalid_argument("update_sigma: omega must lie in (0, 1]");
  }
  SurrogateState next = state;
  next.omega = omega;
  next.stagnated = false;
  const double ss = s.squaredNorm();
  if (!(ss > 0.0)) {
    next.stagnated = true;
    return next;
  }

  const double lo = omega;
  const double hi = 1.0 / omega;
  const double sy = s.dot(y);
  if (sy > 0.0) {
    const double alpha_minus = sy / y.squaredNorm();  // BB2
    const double alpha_plus = ss / sy;                // BB1
    const double left = std::max(alpha_minus, lo);
    const double right = std::min(alpha_plus, hi);
    double alpha;
    if (left <= right) {
      switch (policy) {
        case IntervalPolicy::kLower: alpha = left; break;
        case IntervalPolicy::kUpper: alpha = right; break;
        default: alpha = 0.5 * (left + right); break;
      }
      next.branch = SurrogateBranch::kBBIntersect;
    } else {
      alpha = std::clamp(alpha_plus, lo, hi);
      next.branch = SurrogateBranch::kBBClamp;
    }
    next.sigma = std::clamp(1.0 / alpha, lo, hi);
    next.last_gamma = y;
  } else {
    next.last_gamma = modified_secant(s, y, lambda, f_old, f_new);
    next.sigma = std::clamp(s.dot(next.last_gamma) / ss, lo, hi);
    next.branch = SurrogateBranch::kFallback;
  }
  next.last_s = s;
  return next;
}

}  // namespace mobb
