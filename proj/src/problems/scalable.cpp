// Scalable benchmark families: JOS1, TOI4, NT2 and DD.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mobb/problem.hpp"

namespace mobb::detail {

// JOS1 (Jin, Olhofer, Sendhoff 2001):
//   f1 = (1/n) sum x_i^2,  f2 = (1/n) sum (x_i - 2)^2.
// Both objectives share the Hessian (2/n) I.
Problem make_jos1(std::string name, int n, double bound) {
  return Problem(std::move(name), 2, n, Vector::Constant(n, -bound),
                 Vector::Constant(n, bound), true,
                 [n](const Vector& x, Vector& f, Matrix& jac) {
                   const double inv_n = 1.0 / n;
                   const auto shifted = (x.array() - 2.0);
                   f[0] = inv_n * x.squaredNorm();
                   f[1] = inv_n * shifted.matrix().squaredNorm();
                   jac.row(0) = (2.0 * inv_n) * x.transpose();
                   jac.row(1) = (2.0 * inv_n) * shifted.matrix().transpose();
                 });
}

// TOI4 (Toint's test set, problem 4), n = 4:
//   f1 = x1^2 + x2^2 + 1,  f2 = 0.5((x1 - x2)^2 + (x3 - x4)^2) + 1.
// Scaled to even n by summing over the first n/2 coordinates in f1 and over
// consecutive pairs in f2; n = 4 reproduces the original. The pairwise
// extension is our own choice.
Problem make_toi4(std::string name, int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("TOI4 requires an even dimension >= 2");
  }
  return Problem(std::move(name), 2, n, Vector::Constant(n, -2.0),
                 Vector::Constant(n, 7.0), true,
                 [n](const Vector& x, Vector& f, Matrix& jac) {
                   const int half = n / 2;
                   jac.setZero();
                   f[0] = x.head(half).squaredNorm() + 1.0;
                   jac.row(0).head(half) = 2.0 * x.head(half).transpose();
                   double acc = 0.0;
                   for (int j = 0; j < half; ++j) {
                     const double diff = x[2 * j] - x[2 * j + 1];
                     acc += diff * diff;
                     jac(1, 2 * j) = diff;
                     jac(1, 2 * j + 1) = -diff;
                   }
                   f[1] = 0.5 * acc + 1.0;
                 });
}

// NT2: a separable nonconvex form with bounded level sets,
//   f1 = (1/n) sum [x_i^2       + 0.1 cos(2 pi x_i)]
//   f2 = (1/n) sum [(x_i - 1)^2 + 0.1 cos(2 pi x_i)]
// The cosine term makes both objectives nonconvex around x_i = 0.
Problem make_nt2(std::string name, int n) {
  return Problem(std::move(name), 2, n, Vector::Constant(n, -0.5),
                 Vector::Constant(n, 0.5), false,
                 [n](const Vector& x, Vector& f, Matrix& jac) {
                   constexpr double two_pi = 2.0 * std::numbers::pi;
                   const double inv_n = 1.0 / n;
                   f.setZero();
                   for (int i = 0; i < n; ++i) {
                     const double c = 0.1 * std::cos(two_pi * x[i]);
                     const double dc = -0.1 * two_pi * std::sin(two_pi * x[i]);
                     const double xm = x[i] - 1.0;
                     f[0] += x[i] * x[i] + c;
                     f[1] += xm * xm + c;
                     jac(0, i) = inv_n * (2.0 * x[i] + dc);
                     jac(1, i) = inv_n * (2.0 * xm + dc);
                   }
                   f *= inv_n;
                 });
}

// DD (Das and Dennis 1998), n = 5:
//   f1 = sum x_i^2,  f2 = 3 x1 + 2 x2 - x3 / 3 + 0.01 (x4 - x5)^3.
// For n > 5 the extra coordinates enter f1 only.
Problem make_dd(std::string name, int n) {
  if (n < 5) throw std::invalid_argument("DD requires n >= 5");
  return Problem(std::move(name), 2, n, Vector::Constant(n, -0.5),
                 Vector::Constant(n, 0.5), false,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   const double diff = x[3] - x[4];
                   f[0] = x.squaredNorm();
                   f[1] = 3.0 * x[0] + 2.0 * x[1] - x[2] / 3.0 +
                          0.01 * diff * diff * diff;
                   jac.row(0) = 2.0 * x.transpose();
                   jac.row(1).setZero();
                   jac(1, 0) = 3.0;
                   jac(1, 1) = 2.0;
                   jac(1, 2) = -1.0 / 3.0;
                   jac(1, 3) = 0.03 * diff * diff;
                   jac(1, 4) = -0.03 * diff * diff;
                 });
}

}  // namespace mobb::detail
