#pragma once

#include <Eigen/Cholesky>

#include "mobb/problem.hpp"

namespace mobb {

/// Solution of the simplex-constrained dual of the shared-matrix direction
/// subproblem  min_d max_i <grad f_i, d> + 0.5 d^T B d.
struct DualSolution {
  Vector lambda;      ///< weights on the unit simplex
  Vector g_lambda;    ///< sum_i lambda_i grad f_i
  Vector direction;   ///< d = -B^{-1} g_lambda
  double theta = 0;   ///< -0.5 d^T B d  (<= 0)
  /// min over the simplex of 0.5 ||sum lambda_i grad f_i||^2_{B^{-1}};
  /// always equals -theta.
  double dual_value = 0;
};

/// Minimizer of 0.5 lambda^T Q lambda over the unit simplex for a symmetric
/// positive semidefinite Gram matrix Q (m x m).
///
/// m = 1 and m = 2 are solved in closed form. Larger m runs projected
/// gradient with step 1/lambda_max(Q), periodically polishing with exact KKT
/// solves on simplex faces. A point is accepted once its Frank-Wolfe gap is
/// small relative to lambda^T Q lambda (which keeps every objective
/// decreasing along -g_lambda). Throws DualSolverError when no certified
/// point is found within the iteration cap.
Vector min_norm_weights(const Matrix& gram, int max_iter = 10000);

/// Euclidean projection onto {lambda >= 0, sum lambda = 1}.
Vector project_to_simplex(const Vector& v);

/// Scalar surrogate B = sigma I. The weights do not depend on sigma.
DualSolution solve_dual(const Matrix& gradients, double sigma);

/// B = I; direction is the multiobjective steepest-descent direction.
DualSolution solve_steepest(const Matrix& gradients);

/// Dense surrogate given through its Cholesky factor B = L L^T.
DualSolution solve_dual_dense(const Matrix& gradients,
                              const Eigen::LLT<Matrix>& chol);

/// max_i <grad f_i, d>.
double directional_max(const Matrix& gradients, const Vector& d);

}  // namespace mobb
