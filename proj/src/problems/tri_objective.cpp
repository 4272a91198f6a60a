// Three-objective benchmark rows: MOP5, FDS, ZKG7, MHHM1, MHHM2.

#include <cmath>

#include "mobb/problem.hpp"

namespace mobb::detail {

// MOP5 (Viennet, via Huband et al. 2006), r = x1^2 + x2^2:
//   f1 = 0.5 r + sin(r)
//   f2 = (3 x1 - 2 x2 + 4)^2 / 8 + (x1 - x2 + 1)^2 / 27 + 15
//   f3 = 1 / (r + 1) - 1.1 exp(-r)
Problem make_mop5() {
  return Problem("MOP5", 3, 2, Vector::Constant(2, -1.0),
                 Vector::Constant(2, 1.0), false,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   const double r = x.squaredNorm();
                   const double u = 3.0 * x[0] - 2.0 * x[1] + 4.0;
                   const double v = x[0] - x[1] + 1.0;
                   f[0] = 0.5 * r + std::sin(r);
                   f[1] = u * u / 8.0 + v * v / 27.0 + 15.0;
                   f[2] = 1.0 / (r + 1.0) - 1.1 * std::exp(-r);
                   jac.row(0) = (1.0 + 2.0 * std::cos(r)) * x.transpose();
                   jac(1, 0) = 0.75 * u + 2.0 * v / 27.0;
                   jac(1, 1) = -0.5 * u - 2.0 * v / 27.0;
                   const double dr =
                       -1.0 / ((r + 1.0) * (r + 1.0)) + 1.1 * std::exp(-r);
                   jac.row(2) = 2.0 * dr * x.transpose();
                 });
}

// FDS (Fliege, Grana Drummond, Svaiter 2009), n = 2, 1-based index i:
//   f1 = (1/n^2) sum i (x_i - i)^4
//   f2 = exp(sum x_i / n) + ||x||^2
//   f3 = (1/(n(n+1))) sum i (n - i + 1) exp(-x_i)
Problem make_fds() {
  constexpr int n = 2;
  return Problem("FDS", 3, n, Vector::Constant(n, -1.0),
                 Vector::Constant(n, 1.0), false,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   const double nn = n;
                   const double e = std::exp(x.sum() / nn);
                   f.setZero();
                   f[1] = e + x.squaredNorm();
                   for (int j = 0; j < n; ++j) {
                     const double i = j + 1;
                     const double diff = x[j] - i;
                     f[0] += i * std::pow(diff, 4);
                     jac(0, j) = 4.0 * i * diff * diff * diff / (nn * nn);
                     jac(1, j) = e / nn + 2.0 * x[j];
                     const double w = i * (nn - i + 1.0) / (nn * (nn + 1.0));
                     f[2] += w * std::exp(-x[j]);
                     jac(2, j) = -w * std::exp(-x[j]);
                   }
                   f[0] /= nn * nn;
                 });
}

// ZKG7: a reconstructed form with n = 2, m = 3 and the narrow box
// [2.27, 2.47]^2 inside the Pareto-critical region, plus a shared nonconvex
// coupling term:
//   f_i = ||x - c_i||^2 - 0.5 cos(x1 x2),
//   c_1 = (2.2, 2.2), c_2 = (2.6, 2.3), c_3 = (2.3, 2.6).
Problem make_zkg7() {
  return Problem("ZKG7", 3, 2, Vector::Constant(2, 2.27),
                 Vector::Constant(2, 2.47), false,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   static const double centers[3][2] = {
                       {2.2, 2.2}, {2.6, 2.3}, {2.3, 2.6}};
                   const double p = x[0] * x[1];
                   const double c = -0.5 * std::cos(p);
                   const double dc = 0.5 * std::sin(p);
                   for (int i = 0; i < 3; ++i) {
                     const double a = x[0] - centers[i][0];
                     const double b = x[1] - centers[i][1];
                     f[i] = a * a + b * b + c;
                     jac(i, 0) = 2.0 * a + dc * x[1];
                     jac(i, 1) = 2.0 * b + dc * x[0];
                   }
                 });
}

// MHHM1 (Huband et al. 2006), n = 1:
//   f1 = (x - 0.8)^2, f2 = (x - 0.85)^2, f3 = (x - 0.9)^2
Problem make_mhhm1() {
  return Problem("MHHM1", 3, 1, Vector::Constant(1, 0.0),
                 Vector::Constant(1, 1.0), true,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   static const double centers[3] = {0.8, 0.85, 0.9};
                   for (int i = 0; i < 3; ++i) {
                     const double a = x[0] - centers[i];
                     f[i] = a * a;
                     jac(i, 0) = 2.0 * a;
                   }
                 });
}

// MHHM2 (Huband et al. 2006), n = 2:
//   f1 = (x1-0.8)^2 + (x2-0.6)^2, f2 = (x1-0.85)^2 + (x2-0.7)^2,
//   f3 = (x1-0.9)^2 + (x2-0.6)^2
Problem make_mhhm2() {
  return Problem("MHHM2", 3, 2, Vector::Constant(2, 0.0),
                 Vector::Constant(2, 1.0), true,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   static const double centers[3][2] = {
                       {0.8, 0.6}, {0.85, 0.7}, {0.9, 0.6}};
                   for (int i = 0; i < 3; ++i) {
                     const double a = x[0] - centers[i][0];
                     const double b = x[1] - centers[i][1];
                     f[i] = a * a + b * b;
                     jac(i, 0) = 2.0 * a;
                     jac(i, 1) = 2.0 * b;
                   }
                 });
}

}  // namespace mobb::detail
