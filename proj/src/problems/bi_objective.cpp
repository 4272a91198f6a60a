// Two-variable, two-objective benchmark rows.

#include <cmath>

#include "mobb/problem.hpp"

namespace mobb::detail {
namespace {

Vector box(double lo) { return Vector::Constant(2, lo); }

}  // namespace

// SLCDT1 (Schuetze, Laumanns, Coello, Dellnitz, Talbi 2008), lambda = 0.85:
//   a = x1 + x2, b = x1 - x2, r(t) = sqrt(1 + t^2)
//   f1 = 0.5 (r(a) + r(b) + b) + lambda exp(-b^2)
//   f2 = 0.5 (r(a) + r(b) - b) + lambda exp(-b^2)
Problem make_slcdt1() {
  return Problem("SLCDT1", 2, 2, box(-1.5), box(1.5), false,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   constexpr double lambda = 0.85;
                   const double a = x[0] + x[1];
                   const double b = x[0] - x[1];
                   const double ra = std::sqrt(1.0 + a * a);
                   const double rb = std::sqrt(1.0 + b * b);
                   const double e = lambda * std::exp(-b * b);
                   const double common = 0.5 * (ra + rb) + e;
                   f[0] = common + 0.5 * b;
                   f[1] = common - 0.5 * b;
                   // d/db of the shared part, and d/da.
                   const double da = 0.5 * a / ra;
                   const double db = 0.5 * b / rb - 2.0 * b * e;
                   jac(0, 0) = da + db + 0.5;
                   jac(0, 1) = da - db - 0.5;
                   jac(1, 0) = da + db - 0.5;
                   jac(1, 1) = da - db + 0.5;
                 });
}

// PNR (Preuss, Naujoks, Rudolph 2006):
//   f1 = x1^4 + x2^4 - x1^2 + x2^2 - 10 x1 x2 + 0.25 x1 + 20
//   f2 = (x1 - 1)^2 + x2^2
Problem make_pnr() {
  return Problem("PNR", 2, 2, box(-1.0), box(1.0), true,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   const double x1 = x[0], x2 = x[1];
                   f[0] = std::pow(x1, 4) + std::pow(x2, 4) - x1 * x1 +
                          x2 * x2 - 10.0 * x1 * x2 + 0.25 * x1 + 20.0;
                   f[1] = (x1 - 1.0) * (x1 - 1.0) + x2 * x2;
                   jac(0, 0) = 4.0 * x1 * x1 * x1 - 2.0 * x1 - 10.0 * x2 + 0.25;
                   jac(0, 1) = 4.0 * x2 * x2 * x2 + 2.0 * x2 - 10.0 * x1;
                   jac(1, 0) = 2.0 * (x1 - 1.0);
                   jac(1, 1) = 2.0 * x2;
                 });
}

// MOP2 (Van Veldhuizen's MOP2, i.e. Fonseca-Fleming), n = 2, c = 1/sqrt(n):
//   f1 = 1 - exp(-sum (x_i - c)^2),  f2 = 1 - exp(-sum (x_i + c)^2)
Problem make_mop2() {
  return Problem("MOP2", 2, 2, box(-4.0), box(4.0), false,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   const double c = 1.0 / std::sqrt(2.0);
                   const Vector xm = x.array() - c;
                   const Vector xp = x.array() + c;
                   const double e1 = std::exp(-xm.squaredNorm());
                   const double e2 = std::exp(-xp.squaredNorm());
                   f[0] = 1.0 - e1;
                   f[1] = 1.0 - e2;
                   jac.row(0) = 2.0 * e1 * xm.transpose();
                   jac.row(1) = 2.0 * e2 * xp.transpose();
                 });
}

// KW2 (Kim and de Weck 2005):
//   f1 = -[3(1-x1)^2 e^{-x1^2-(x2+1)^2} - 10(x1/5 - x1^3 - x2^5) e^{-x1^2-x2^2}
//          - 3 e^{-(x1+2)^2-x2^2} + 0.5(2 x1 + x2)]
//   f2 = -[3(1+x2)^2 e^{-x2^2-(1-x1)^2} - 10(-x2/5 + x2^3 + x1^5) e^{-x1^2-x2^2}
//          - 3 e^{-(2-x2)^2-x1^2}]
Problem make_kw2() {
  return Problem(
      "KW2", 2, 2, box(-1.0), box(1.0), false,
      [](const Vector& x, Vector& f, Matrix& jac) {
        const double x1 = x[0], x2 = x[1];
        // Each term is p(x) e^{q(x)}; gradient (grad p + p grad q) e^q.
        auto term = [&](double p, double dp1, double dp2, double q, double dq1,
                        double dq2, int row) {
          const double e = std::exp(q);
          f[row] += p * e;
          jac(row, 0) += (dp1 + p * dq1) * e;
          jac(row, 1) += (dp2 + p * dq2) * e;
        };
        f.setZero();
        jac.setZero();
        const double gauss = -x1 * x1 - x2 * x2;

        term(-3.0 * (1 - x1) * (1 - x1), 6.0 * (1 - x1), 0.0,
             -x1 * x1 - (x2 + 1) * (x2 + 1), -2.0 * x1, -2.0 * (x2 + 1), 0);
        term(10.0 * (x1 / 5 - x1 * x1 * x1 - std::pow(x2, 5)),
             10.0 * (0.2 - 3.0 * x1 * x1), -50.0 * std::pow(x2, 4), gauss,
             -2.0 * x1, -2.0 * x2, 0);
        term(3.0, 0.0, 0.0, -(x1 + 2) * (x1 + 2) - x2 * x2, -2.0 * (x1 + 2),
             -2.0 * x2, 0);
        f[0] -= 0.5 * (2.0 * x1 + x2);
        jac(0, 0) -= 1.0;
        jac(0, 1) -= 0.5;

        term(-3.0 * (1 + x2) * (1 + x2), 0.0, -6.0 * (1 + x2),
             -x2 * x2 - (1 - x1) * (1 - x1), 2.0 * (1 - x1), -2.0 * x2, 1);
        term(10.0 * (-x2 / 5 + x2 * x2 * x2 + std::pow(x1, 5)),
             50.0 * std::pow(x1, 4), 10.0 * (-0.2 + 3.0 * x2 * x2), gauss,
             -2.0 * x1, -2.0 * x2, 1);
        term(3.0, 0.0, 0.0, -(2 - x2) * (2 - x2) - x1 * x1, -2.0 * x1,
             2.0 * (2 - x2), 1);
      });
}

// FF1 (Fonseca-Fleming, two-variable form):
//   f1 = 1 - exp(-(x1-1)^2 - (x2+1)^2),  f2 = 1 - exp(-(x1+1)^2 - (x2-1)^2)
Problem make_ff1() {
  return Problem("FF1", 2, 2, box(-0.5), box(0.5), false,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   const double a1 = x[0] - 1.0, a2 = x[1] + 1.0;
                   const double b1 = x[0] + 1.0, b2 = x[1] - 1.0;
                   const double e1 = std::exp(-a1 * a1 - a2 * a2);
                   const double e2 = std::exp(-b1 * b1 - b2 * b2);
                   f[0] = 1.0 - e1;
                   f[1] = 1.0 - e2;
                   jac(0, 0) = 2.0 * a1 * e1;
                   jac(0, 1) = 2.0 * a2 * e1;
                   jac(1, 0) = 2.0 * b1 * e2;
                   jac(1, 1) = 2.0 * b2 * e2;
                 });
}

// Deb's bimodal problem (as used by Morovati et al. 2016):
//   g(x2) = 2 - exp(-((x2-0.2)/0.004)^2) - 0.8 exp(-((x2-0.6)/0.4)^2)
//   f1 = x1,  f2 = g(x2) / x1
// Undefined at x1 = 0; evaluation there reports a non-finite value.
Problem make_deb() {
  return Problem("Deb", 2, 2, box(0.1), box(1.0), false,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   const double u = (x[1] - 0.2) / 0.004;
                   const double v = (x[1] - 0.6) / 0.4;
                   const double eu = std::exp(-u * u);
                   const double ev = 0.8 * std::exp(-v * v);
                   const double g = 2.0 - eu - ev;
                   const double dg = eu * 2.0 * u / 0.004 + ev * 2.0 * v / 0.4;
                   f[0] = x[0];
                   f[1] = g / x[0];
                   jac(0, 0) = 1.0;
                   jac(0, 1) = 0.0;
                   jac(1, 0) = -g / (x[0] * x[0]);
                   jac(1, 1) = dg / x[0];
                 });
}

// BK1 (Binh and Korn, via Huband et al. 2006):
//   f1 = x1^2 + x2^2,  f2 = (x1 - 5)^2 + (x2 - 5)^2
Problem make_bk1() {
  return Problem("BK1", 2, 2, box(-5.0), box(10.0), true,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   const Vector shifted = x.array() - 5.0;
                   f[0] = x.squaredNorm();
                   f[1] = shifted.squaredNorm();
                   jac.row(0) = 2.0 * x.transpose();
                   jac.row(1) = 2.0 * shifted.transpose();
                 });
}

// WIT (Witting's parametric family, as collected by Chen et al. 2023).
// Reconstructed member with lambda = 0.5:
//   f1 = lambda((x1-2)^2 + (x2-2)^2) + (1-lambda)((x1-2)^4 + (x2-2)^8)
//   f2 = (x1 + 2)^2 + (x2 + 2)^2
Problem make_wit() {
  return Problem("WIT", 2, 2, box(-2.0), box(2.0), false,
                 [](const Vector& x, Vector& f, Matrix& jac) {
                   constexpr double lambda = 0.5;
                   const double a = x[0] - 2.0, b = x[1] - 2.0;
                   const double c = x[0] + 2.0, d = x[1] + 2.0;
                   f[0] = lambda * (a * a + b * b) +
                          (1.0 - lambda) * (std::pow(a, 4) + std::pow(b, 8));
                   f[1] = c * c + d * d;
                   jac(0, 0) = 2.0 * lambda * a + 4.0 * (1.0 - lambda) * a * a * a;
                   jac(0, 1) =
                       2.0 * lambda * b + 8.0 * (1.0 - lambda) * std::pow(b, 7);
                   jac(1, 0) = 2.0 * c;
                   jac(1, 1) = 2.0 * d;
                 });
}

}  // namespace mobb::detail
