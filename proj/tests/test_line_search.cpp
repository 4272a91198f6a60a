#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "mobb/dual.hpp"
#include "mobb/errors.hpp"
#include "mobb/line_search.hpp"
#include "mobb/problem.hpp"
#include "oracles.hpp"

using mobb::Matrix;
using mobb::Vector;

namespace {

mobb::Problem square() {
  return mobb::Problem("square", 1, 1, Vector::Constant(1, -2), Vector::Constant(1, 2),
                       true, [](const Vector& x, Vector& f, Matrix& j) {
                         f[0] = x[0] * x[0];
                         j(0, 0) = 2 * x[0];
                       });
}

mobb::Problem two_parabolas() {
  return mobb::Problem("pair", 2, 1, Vector::Constant(1, -1), Vector::Constant(1, 3),
                       true, [](const Vector& x, Vector& f, Matrix& j) {
                         f[0] = x[0] * x[0];
                         f[1] = (x[0] - 2) * (x[0] - 2);
                         j(0, 0) = 2 * x[0];
                         j(1, 0) = 2 * (x[0] - 2);
                       });
}

// Defined only on |x| < 1.5; NaN outside.
mobb::Problem fenced_square() {
  return mobb::Problem("fenced", 1, 1, Vector::Constant(1, -1), Vector::Constant(1, 1),
                       true, [](const Vector& x, Vector& f, Matrix& j) {
                         const bool in = std::abs(x[0]) < 1.5;
                         f[0] = in ? x[0] * x[0] : std::nan("");
                         j(0, 0) = in ? 2 * x[0] : std::nan("");
                       });
}

mobb::Problem linear_down() {
  return mobb::Problem("linear", 1, 1, Vector::Constant(1, -1), Vector::Constant(1, 1),
                       false, [](const Vector& x, Vector& f, Matrix& j) {
                         f[0] = -x[0];
                         j(0, 0) = -1;
                       });
}

Vector v1(double a) { return Vector::Constant(1, a); }

}  // namespace

TEST(WolfeSearch, QuadraticExample) {
  const auto p = square();
  mobb::CountedProblem c(p);
  const auto r = mobb::wolfe_search(c, v1(1), v1(1), v1(-2), -4.0);
  EXPECT_DOUBLE_EQ(r.t, 0.5);
  EXPECT_TRUE(r.satisfied_armijo);
  EXPECT_TRUE(r.satisfied_curvature);
  EXPECT_DOUBLE_EQ(r.values_at_t[0], 0.0);
  EXPECT_DOUBLE_EQ(r.grads_at_t(0, 0), 0.0);
  EXPECT_EQ(r.trials, 2);
  EXPECT_EQ(c.fevals(), 2);
}

TEST(WolfeSearch, StepLowerBound) {
  // t >= 0.9 (1 - sigma2) sigma / L with L = 2 and d = -grad / sigma.
  const auto p = square();
  for (double sigma : {0.5, 1.0, 2.0, 5.0}) {
    mobb::CountedProblem c(p);
    const double x = 1.0, g = 2.0;
    const double D0 = -g * g / sigma;
    const auto r = mobb::wolfe_search(c, v1(x), v1(x * x), v1(-g / sigma), D0);
    EXPECT_GE(r.t, 0.9 * (1 - 0.1) * sigma / 2) << sigma;
    EXPECT_TRUE(r.satisfied_armijo && r.satisfied_curvature);
  }
}

TEST(WolfeSearch, RejectsNonDescent) {
  const auto p = two_parabolas();
  mobb::CountedProblem c(p);
  const Matrix g = p.jacobian(v1(0.5));
  const double D0 = mobb::directional_max(g, v1(1.0));
  EXPECT_GT(D0, 0.0);
  EXPECT_THROW(mobb::wolfe_search(c, v1(0.5), p.values(v1(0.5)), v1(1.0), D0),
               std::invalid_argument);
  EXPECT_THROW(mobb::wolfe_search(c, v1(0.5), p.values(v1(0.5)), v1(1.0), 0.0),
               std::invalid_argument);
  EXPECT_EQ(c.fevals(), 0);
}

TEST(WolfeSearch, RejectsBadParameters) {
  const auto p = square();
  mobb::CountedProblem c(p);
  mobb::WolfeParams bad;
  bad.sigma1 = 0.5;
  bad.sigma2 = 0.4;
  EXPECT_THROW(mobb::wolfe_search(c, v1(1), v1(1), v1(-2), -4, bad),
               std::invalid_argument);
  bad = {};
  bad.max_trials = 0;
  EXPECT_THROW(mobb::wolfe_search(c, v1(1), v1(1), v1(-2), -4, bad),
               std::invalid_argument);
  EXPECT_THROW(mobb::wolfe_search(c, Vector::Zero(2), v1(1), v1(-2), -4),
               mobb::DimensionMismatchError);
}

TEST(WolfeSearch, UnboundedDirectionFlagsCurvature) {
  const auto p = linear_down();
  mobb::CountedProblem c(p);
  const auto r = mobb::wolfe_search(c, v1(0), v1(0), v1(1), -1.0);
  EXPECT_TRUE(r.satisfied_armijo);
  EXPECT_FALSE(r.satisfied_curvature);
  EXPECT_EQ(r.trials, 50);
  EXPECT_EQ(c.fevals(), 50);
  EXPECT_DOUBLE_EQ(r.t, std::ldexp(1.0, 49));
}

TEST(WolfeSearch, NoDecreaseThrows) {
  // A D0 that lies about the slope: f increases along d.
  const auto p = square();
  mobb::CountedProblem c(p);
  mobb::WolfeParams params;
  params.max_trials = 10;
  EXPECT_THROW(mobb::wolfe_search(c, v1(1), v1(1), v1(1), -1.0, params),
               mobb::LineSearchError);
  EXPECT_EQ(c.fevals(), 10);
}

TEST(WolfeSearch, NonFiniteTrialsBacktrack) {
  const auto p = fenced_square();
  mobb::CountedProblem c(p);
  const auto r = mobb::wolfe_search(c, v1(1), v1(1), v1(-3), -6.0);
  EXPECT_DOUBLE_EQ(r.t, 0.5);
  EXPECT_TRUE(r.satisfied_armijo && r.satisfied_curvature);
  EXPECT_EQ(r.trials, 2);
}

TEST(WolfeSearch, ExpandsShortSteps) {
  // d much shorter than the minimizer distance: t must grow past 1.
  const auto p = square();
  mobb::CountedProblem c(p);
  const auto r = mobb::wolfe_search(c, v1(1), v1(1), v1(-0.01), -0.02);
  EXPECT_GT(r.t, 1.0);
  EXPECT_TRUE(r.satisfied_armijo && r.satisfied_curvature);
}

// Post-conditions re-checked by hand on random multiobjective quadratics.
TEST(WolfeSearch, PostConditionsAndMonotoneDecrease) {
  std::mt19937_64 gen(41);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 4;
    const Matrix centers = oracle::random_matrix(gen, 2, n, -2, 2);
    const Vector scales = oracle::random_vector(gen, 2, 0.5, 4.0);
    mobb::Problem p("quad", 2, n, Vector::Constant(n, -3), Vector::Constant(n, 3), true,
                    [=](const Vector& x, Vector& f, Matrix& j) {
                      for (int i = 0; i < 2; ++i) {
                        const Vector r = x - centers.row(i).transpose();
                        f[i] = 0.5 * scales[i] * r.squaredNorm();
                        j.row(i) = scales[i] * r.transpose();
                      }
                    });
    const Vector x = oracle::random_vector(gen, n, -3, 3);
    const auto ev = p.evaluate(x);
    const auto dual = mobb::solve_dual(ev.jacobian, 0.3 + t % 5);
    if (dual.direction.norm() < 1e-8) continue;
    const double D0 = mobb::directional_max(ev.jacobian, dual.direction);
    mobb::CountedProblem c(p);
    const auto r = mobb::wolfe_search(c, x, ev.values, dual.direction, D0);
    ASSERT_TRUE(r.satisfied_armijo && r.satisfied_curvature);
    const auto at = p.evaluate(x + r.t * dual.direction);
    for (int i = 0; i < 2; ++i) {
      EXPECT_LE(at.values[i], ev.values[i] + 1e-4 * r.t * D0);
      EXPECT_LT(r.values_at_t[i], ev.values[i]);
    }
    EXPECT_GE(oracle::brute_directional_max(at.jacobian, dual.direction), 0.1 * D0);
    EXPECT_EQ(c.fevals(), r.trials);
  }
}

TEST(ArmijoSearch, HalvesUntilDecrease) {
  const auto p = square();
  mobb::CountedProblem c(p);
  const auto r = mobb::armijo_search(c, v1(1), v1(1), v1(-4), -8.0);
  EXPECT_DOUBLE_EQ(r.t, 0.25);
  EXPECT_TRUE(r.satisfied_armijo);
  EXPECT_EQ(r.trials, 3);
}
