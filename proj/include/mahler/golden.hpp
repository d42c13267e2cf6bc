#pragma once

#include <cmath>
#include <utility>

namespace mahler {

// Golden-section minimization of f over [a, b] using a fixed budget of
// function evaluations; returns (argmin, min) including the endpoints in the
// comparison. Deterministic, derivative-free, no unimodality requirement
// beyond best-effort.
template <typename F>
std::pair<double, double> golden_minimize(F&& f, double a, double b, int evals) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double best_x = a, best_v = f(a);
  {
    const double vb = f(b);
    if (vb < best_v) {
      best_v = vb;
      best_x = b;
    }
  }
  double lo = a, hi = b;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  int used = 4;
  while (used < evals) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
    ++used;
  }
  if (f1 < best_v) {
    best_v = f1;
    best_x = x1;
  }
  if (f2 < best_v) {
    best_v = f2;
    best_x = x2;
  }
  return {best_x, best_v};
}

}  // namespace mahler
