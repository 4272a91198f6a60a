#include "mobb/dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "mobb/errors.hpp"

namespace mobb {
namespace {

// A Frank-Wolfe gap below ||g_lambda||^2 is exactly what keeps every
// objective decreasing along -g_lambda, so the certificate is relative.
constexpr double kRelTol = 1e-9;
constexpr double kAbsTol = 1e-14;
constexpr double kNegativeRoundoff = 1e-12;
constexpr int kPolishEvery = 10;
constexpr std::size_t kMaxPolishSupport = 10;

double frank_wolfe_gap(const Matrix& q, const Vector& lambda) {
  const Vector grad = q * lambda;
  return lambda.dot(grad) - grad.minCoeff();
}

bool certified(const Matrix& q, const Vector& lambda, double rel, double abs) {
  const double value = lambda.dot(q * lambda);
  return frank_wolfe_gap(q, lambda) <= rel * value + abs;
}

// Exact minimizer of 0.5 l^T Q l on the affine hull of `support`, scattered
// back to length m. Returns false when the solution leaves the simplex
// by more than roundoff.
bool solve_on_support(const Matrix& q, const std::vector<int>& support,
                      Vector& out) {
  const int m = static_cast<int>(q.rows());
  const int s = static_cast<int>(support.size());
  Matrix kkt = Matrix::Zero(s + 1, s + 1);
  Vector rhs = Vector::Zero(s + 1);
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) kkt(a, b) = q(support[a], support[b]);
    kkt(a, s) = 1.0;
    kkt(s, a) = 1.0;
  }
  rhs[s] = 1.0;
  const Vector sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  if (!sol.allFinite()) return false;
  out = Vector::Zero(m);
  for (int a = 0; a < s; ++a) {
    if (sol[a] < -kNegativeRoundoff) return false;
    out[support[a]] = std::max(sol[a], 0.0);
  }
  const double total = out.sum();
  if (!(total > 0.0)) return false;
  out /= total;
  return true;
}

// Tries the faces of the simplex (all of them for small m, otherwise those
// inside the iterate's support) and returns the best one certified optimal
// by the Frank-Wolfe gap.
bool polish(const Matrix& q, const Vector& lambda, Vector& out) {
  const bool all_faces = static_cast<std::size_t>(lambda.size()) <= kMaxPolishSupport;
  std::vector<int> support;
  for (int i = 0; i < lambda.size(); ++i) {
    if (all_faces || lambda[i] > 0.0) support.push_back(i);
  }
  if (support.size() > kMaxPolishSupport) return false;
  bool found = false;
  double best = std::numeric_limits<double>::infinity();
  const unsigned subsets = 1u << support.size();
  std::vector<int> face;
  Vector candidate;
  for (unsigned mask = 1; mask < subsets; ++mask) {
    face.clear();
    for (std::size_t b = 0; b < support.size(); ++b) {
      if (mask & (1u << b)) face.push_back(support[b]);
    }
    if (!solve_on_support(q, face, candidate)) continue;
    if (!certified(q, candidate, kRelTol, kAbsTol)) continue;
    const double value = candidate.dot(q * candidate);
    if (value < best) {
      best = value;
      out = candidate;
      found = true;
    }
  }
  return found;
}

}  // namespace

Vector project_to_simplex(const Vector& v) {
  const int m = static_cast<int>(v.size());
  if (m == 0) throw std::invalid_argument("project_to_simplex: empty vector");
  std::vector<double> sorted(v.data(), v.data() + m);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (int j = 0; j < m; ++j) {
    cumulative += sorted[j];
    const double candidate = (cumulative - 1.0) / (j + 1);
    if (sorted[j] - candidate > 0.0) shift = candidate;
  }
  return (v.array() - shift).max(0.0).matrix();
}

Vector min_norm_weights(const Matrix& gram, int max_iter) {
  const int m = static_cast<int>(gram.rows());
  if (m == 0 || gram.cols() != m) {
    throw DimensionMismatchError("min_norm_weights: Gram matrix must be square");
  }
  if (!gram.allFinite()) throw DualSolverError("min_norm_weights: non-finite Gram");
  if (m == 1) return Vector::Ones(1);

  // Scale-free tolerances: work with Q / (1 + max_i Q_ii).
  const double scale = 1.0 + gram.diagonal().maxCoeff();
  const Matrix q = gram / scale;

  if (m == 2) {
    // ||l g1 + (1-l) g2||^2 is a scalar quadratic in l.
    const double curvature = q(0, 0) - 2.0 * q(0, 1) + q(1, 1);
    double l = 0.5;
    if (curvature > 0.0) l = std::clamp((q(1, 1) - q(0, 1)) / curvature, 0.0, 1.0);
    Vector out(2);
    out << l, 1.0 - l;
    return out;
  }

  const double lipschitz =
      Eigen::SelfAdjointEigenSolver<Matrix>(q, Eigen::EigenvaluesOnly)
          .eigenvalues()
          .maxCoeff();
  Vector lambda = Vector::Constant(m, 1.0 / m);
  if (!(lipschitz > 0.0)) return lambda;  // all gradients vanish

  const double step = 1.0 / lipschitz;
  for (int it = 0; it < max_iter; ++it) {
    const Vector next = project_to_simplex(lambda - step * (q * lambda));
    lambda = next;
    if (certified(q, lambda, kRelTol, kAbsTol)) return lambda;
    if ((it + 1) % kPolishEvery == 0) {
      Vector polished;
      if (polish(q, lambda, polished)) return polished;
    }
  }
  if (certified(q, lambda, 1e-6, 1e-13)) return lambda;
  throw DualSolverError("min_norm_weights: projected gradient did not converge");
}

DualSolution solve_dual(const Matrix& gradients, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("solve_dual: sigma must be positive and finite");
  }
  if (!gradients.allFinite()) throw DualSolverError("solve_dual: non-finite gradients");
  DualSolution sol;
  sol.lambda = min_norm_weights(gradients * gradients.transpose());
  sol.g_lambda = gradients.transpose() * sol.lambda;
  sol.direction = -sol.g_lambda / sigma;
  sol.dual_value = sol.g_lambda.squaredNorm() / (2.0 * sigma);
  sol.theta = -sol.dual_value;
  return sol;
}

DualSolution solve_steepest(const Matrix& gradients) {
  return solve_dual(gradients, 1.0);
}

DualSolution solve_dual_dense(const Matrix& gradients,
                              const Eigen::LLT<Matrix>& chol) {
  if (chol.info() != Eigen::Success) {
    throw DualSolverError("solve_dual_dense: surrogate is not positive definite");
  }
  if (chol.rows() != gradients.cols()) {
    throw DimensionMismatchError("solve_dual_dense: B must be n x n");
  }
  if (!gradients.allFinite()) {
    throw DualSolverError("solve_dual_dense: non-finite gradients");
  }
  // Gram of the B^{-1} inner product: Z = L^{-1} G^T, Q = Z^T Z.
  const Matrix z = chol.matrixL().solve(gradients.transpose());
  DualSolution sol;
  sol.lambda = min_norm_weights(z.transpose() * z);
  sol.g_lambda = gradients.transpose() * sol.lambda;
  sol.direction = -chol.solve(sol.g_lambda);
  sol.dual_value = -0.5 * sol.g_lambda.dot(sol.direction);
  sol.theta = -sol.dual_value;
  return sol;
}

double directional_max(const Matrix& gradients, const Vector& d) {
  if (gradients.cols() != d.size()) {
    throw DimensionMismatchError("directional_max: dimension mismatch");
  }
  return (gradients * d).maxCoeff();
}

}  // namespace mobb
