#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "mobb/errors.hpp"
#include "mobb/problem.hpp"
#include "mobb/surrogate.hpp"
#include "oracles.hpp"

using mobb::IntervalPolicy;
using mobb::Matrix;
using mobb::SurrogateBranch;
using mobb::Vector;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(v.size());
  int i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

// One Jacobian row whose norm is g.
Matrix gradient_of_norm(double g) {
  Matrix m(1, 2);
  m << 0.6 * g, 0.8 * g;
  return m;
}

}  // namespace

TEST(ComputeOmega, Examples) {
  EXPECT_DOUBLE_EQ(mobb::compute_omega(gradient_of_norm(0.5), {1, 1, 1}), 0.5);
  EXPECT_NEAR(mobb::compute_omega(gradient_of_norm(10), {0.01, 1, 2}), 0.01, 1e-15);
  EXPECT_DOUBLE_EQ(mobb::compute_omega(Matrix::Zero(2, 3), {1, 1, 1}), mobb::kOmegaFloor);
}

TEST(ComputeOmega, UsesLargestGradientNorm) {
  Matrix g(2, 2);
  g << 0.1, 0, 0, 0.3;
  EXPECT_NEAR(mobb::compute_omega(g, {1, 1, 1}), 0.3, 1e-15);
  EXPECT_NEAR(mobb::compute_omega(g, {1, 2, 2}), 2 * 0.09, 1e-15);
}

TEST(ComputeOmega, RejectsBadConstants) {
  const Matrix g = gradient_of_norm(1);
  EXPECT_THROW(mobb::compute_omega(g, {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(mobb::compute_omega(g, {1.5, 1, 1}), std::invalid_argument);
  EXPECT_THROW(mobb::compute_omega(g, {1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(mobb::compute_omega(g, {1, 1, -1}), std::invalid_argument);
}

TEST(UpdateSigma, BBIntersect) {
  const auto s = mobb::update_sigma({}, vec({1, 0}), vec({2, 0}), vec({1}), vec({1}),
                                    vec({0.5}), 0.1);
  EXPECT_DOUBLE_EQ(s.sigma, 2.0);
  EXPECT_EQ(s.branch, SurrogateBranch::kBBIntersect);
  EXPECT_DOUBLE_EQ(s.omega, 0.1);
  EXPECT_EQ(s.last_s, vec({1, 0}));
}

TEST(UpdateSigma, BBClamp) {
  const auto s = mobb::update_sigma({}, vec({1, 0}), vec({100, 0}), vec({1}), vec({1}),
                                    vec({0.5}), 0.1);
  EXPECT_DOUBLE_EQ(s.sigma, 10.0);
  EXPECT_EQ(s.branch, SurrogateBranch::kBBClamp);
  // Far on the other side: tiny curvature clamps to omega.
  const auto t = mobb::update_sigma({}, vec({1, 0}), vec({1e-3, 0}), vec({1}), vec({1}),
                                    vec({0.5}), 0.1);
  EXPECT_DOUBLE_EQ(t.sigma, 0.1);
  EXPECT_EQ(t.branch, SurrogateBranch::kBBClamp);
}

TEST(UpdateSigma, Fallback) {
  const auto s = mobb::update_sigma({}, vec({1, 0}), vec({-1, 0}), vec({1}), vec({1}),
                                    vec({0.7}), 0.01);
  EXPECT_NEAR(s.sigma, 0.3, 1e-15);
  EXPECT_EQ(s.branch, SurrogateBranch::kFallback);
  EXPECT_NEAR(s.last_gamma[0], 0.3, 1e-15);
  EXPECT_DOUBLE_EQ(s.last_gamma[1], 0.0);
}

TEST(UpdateSigma, ZeroStepStagnates) {
  mobb::SurrogateState in;
  in.sigma = 3.0;
  in.branch = SurrogateBranch::kBBClamp;
  const auto s = mobb::update_sigma(in, vec({0, 0}), vec({1, 0}), vec({1}), vec({1}),
                                    vec({1}), 0.1);
  EXPECT_TRUE(s.stagnated);
  EXPECT_DOUBLE_EQ(s.sigma, 3.0);
  EXPECT_EQ(s.branch, SurrogateBranch::kBBClamp);
}

TEST(UpdateSigma, ValidatesInput) {
  EXPECT_THROW(mobb::update_sigma({}, vec({1}), vec({1, 0}), vec({1}), vec({1}),
                                  vec({1}), 0.1),
               mobb::DimensionMismatchError);
  EXPECT_THROW(mobb::update_sigma({}, vec({1}), vec({1}), vec({1}), vec({1}), vec({1}), 0),
               std::invalid_argument);
  EXPECT_THROW(mobb::update_sigma({}, vec({1}), vec({1}), vec({1}), vec({1}), vec({1}), 2),
               std::invalid_argument);
}

// <s, gamma> > 0 whenever the weighted decrease is positive.
TEST(ModifiedSecant, PositivityOverRandomTuples) {
  std::mt19937_64 gen(1000);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 7;
    const int m = 1 + t % 3;
    const Vector s = oracle::random_vector(gen, n, -3, 3);
    const Vector y = oracle::random_vector(gen, n, -50, 50);
    Vector lambda = oracle::random_vector(gen, m, 0, 1);
    lambda /= lambda.sum();
    const Vector f_old = oracle::random_vector(gen, m, -5, 5);
    Vector df = oracle::random_vector(gen, m, 0, 2);
    if (lambda.dot(df) <= 0) df.setConstant(1.0);
    const Vector f_new = f_old - df;
    const Vector gamma = mobb::modified_secant(s, y, lambda, f_old, f_new);
    EXPECT_GT(s.dot(gamma), 0.0) << t;
    if (s.dot(y) <= 0) {
      const auto st = mobb::update_sigma({}, s, y, lambda, f_old, f_new, 0.01);
      EXPECT_GT(st.sigma, 0.0);
      EXPECT_EQ(st.branch, SurrogateBranch::kFallback);
    }
  }
}

TEST(UpdateSigma, ContainmentAndBBOrdering) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  for (int t = 0; t < 2000; ++t) {
    const int n = 1 + t % 5;
    const Vector s = oracle::random_vector(gen, n, -2, 2);
    const Vector y = oracle::random_vector(gen, n, -2, 2) * std::pow(10.0, t % 7 - 3);
    const double omega = u(gen);
    const Vector lambda = Vector::Constant(1, 1.0);
    const auto st =
        mobb::update_sigma({}, s, y, lambda, Vector::Ones(1), Vector::Zero(1), omega,
                           static_cast<IntervalPolicy>(t % 3));
    EXPECT_GT(st.sigma, 0.0);
    EXPECT_GE(st.sigma, omega);
    EXPECT_LE(st.sigma, 1.0 / omega);
    if (s.dot(y) > 0) {
      EXPECT_LE(s.dot(y) / y.squaredNorm(), s.squaredNorm() / s.dot(y) * (1 + 1e-12));
      EXPECT_NE(st.branch, SurrogateBranch::kFallback);
    } else {
      EXPECT_EQ(st.branch, SurrogateBranch::kFallback);
    }
  }
}

TEST(UpdateSigma, PolicyOrdering) {
  // alpha- = 0.5, alpha+ = 1 for this pair; both inside [0.1, 10].
  const Vector s = vec({1, 1});
  const Vector y = vec({2, 0});
  auto sigma_for = [&](IntervalPolicy p) {
    return mobb::update_sigma({}, s, y, vec({1}), vec({1}), vec({0}), 0.1, p).sigma;
  };
  const double lower = sigma_for(IntervalPolicy::kLower);
  const double mid = sigma_for(IntervalPolicy::kMidpoint);
  const double upper = sigma_for(IntervalPolicy::kUpper);
  EXPECT_DOUBLE_EQ(lower, 1.0 / 0.5);
  EXPECT_DOUBLE_EQ(upper, 1.0 / 1.0);
  EXPECT_DOUBLE_EQ(mid, 1.0 / 0.75);
  EXPECT_GT(lower, mid);
  EXPECT_GT(mid, upper);
}

TEST(IntervalPolicy, Parse) {
  EXPECT_EQ(mobb::parse_interval_policy("lower"), IntervalPolicy::kLower);
  EXPECT_EQ(mobb::parse_interval_policy("midpoint"), IntervalPolicy::kMidpoint);
  EXPECT_EQ(mobb::parse_interval_policy("upper"), IntervalPolicy::kUpper);
  EXPECT_THROW(mobb::parse_interval_policy("middle"), std::invalid_argument);
  EXPECT_EQ(mobb::to_string(SurrogateBranch::kBBIntersect), "BB_INTERSECT");
  EXPECT_EQ(mobb::to_string(SurrogateBranch::kFallback), "FALLBACK");
}

// Shared Hessian h I: one step makes the surrogate exact.
TEST(UpdateSigma, ExactOnJOS1) {
  const int n = 50;
  const auto p = mobb::get_problem("JOS1a");
  std::mt19937_64 gen(4);
  const Vector x0 = oracle::random_vector(gen, n, -2, 2);
  const Vector x1 = oracle::random_vector(gen, n, -2, 2);
  const auto e0 = p.evaluate(x0), e1 = p.evaluate(x1);
  const Vector lambda = vec({0.3, 0.7});
  const Vector y = (e1.jacobian - e0.jacobian).transpose() * lambda;
  for (auto policy : {IntervalPolicy::kLower, IntervalPolicy::kMidpoint,
                      IntervalPolicy::kUpper}) {
    const auto st = mobb::update_sigma({}, x1 - x0, y, lambda, e0.values, e1.values,
                                       0.01, policy);
    EXPECT_NEAR(st.sigma, 2.0 / n, 1e-12);
    EXPECT_EQ(st.branch, SurrogateBranch::kBBIntersect);
  }
}
