#include "eslab/ode.hpp"

#include <algorithm>
#include <cmath>

namespace eslab {

namespace {

State4 axpy(const State4& y, double h, const State4& k) {
  State4 r;
  for (int i = 0; i < 4; ++i) r[i] = y[i] + h * k[i];
  return r;
}

double err_norm(const State4& e, const State4& y) {
  double n = 0.0;
  for (int i = 0; i < 4; ++i) n = std::max(n, std::abs(e[i]) / (1.0 + std::abs(y[i])));
  return n;
}

} // namespace

State4 rk45(const std::function<State4(double, const State4&)>& f, State4 y,
            double tol) {
  // Dormand-Prince coefficients
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                      a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 35.0 / 384 - 5179.0 / 57600,
                      e3 = 500.0 / 1113 - 7571.0 / 16695,
                      e4 = 125.0 / 192 - 393.0 / 640,
                      e5 = -2187.0 / 6784 + 92097.0 / 339200,
                      e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  double t = 0.0, h = 0.05;
  double prev_err = 1.0;
  int rejects_in_a_row = 0;
  while (t < 1.0) {
    h = std::min(h, 1.0 - t);
    if (h < 1e-14) throw StiffnessError("step collapse");
    State4 k1 = f(t, y);
    State4 k2 = f(t + c2 * h, axpy(y, h * a21, k1));
    State4 y3;
    for (int i = 0; i < 4; ++i) y3[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    State4 k3 = f(t + c3 * h, y3);
    State4 y4;
    for (int i = 0; i < 4; ++i)
      y4[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    State4 k4 = f(t + c4 * h, y4);
    State4 y5;
    for (int i = 0; i < 4; ++i)
      y5[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    State4 k5 = f(t + c5 * h, y5);
    State4 y6;
    for (int i = 0; i < 4; ++i)
      y6[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                          a65 * k5[i]);
    State4 k6 = f(t + h, y6);
    State4 ynew;
    for (int i = 0; i < 4; ++i)
      ynew[i] = y[i] +
                h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    State4 k7 = f(t + h, ynew);
    State4 err;
    for (int i = 0; i < 4; ++i)
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                    e7 * k7[i]);
    double en = err_norm(err, ynew) / (tol * h);
    if (en <= 1.0) {
      t += h;
      y = ynew;
      // PI controller
      double fac = 0.9 * std::pow(en + 1e-30, -0.7 / 5.0) *
                   std::pow(prev_err + 1e-30, 0.4 / 5.0);
      h *= std::clamp(fac, 0.2, 5.0);
      prev_err = en + 1e-30;
      rejects_in_a_row = 0;
    } else {
      h *= std::max(0.1, 0.9 * std::pow(en, -1.0 / 5.0));
      if (++rejects_in_a_row > 200) throw StiffnessError("persistent rejection");
    }
  }
  return y;
}

} // namespace eslab
