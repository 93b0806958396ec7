#pragma once

#include <cmath>
#include <utility>

namespace unimodal_lab {

struct ScalarMax {
  double x;
  double value;
  int evaluations;
};

/// Golden-section search for the maximum of a unimodal function on [a, b].
/// Stops once the bracket is narrower than `tol`.
template <typename F>
ScalarMax golden_section_max(F&& f, double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int evals = 2;
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
    ++evals;
  }
  return f1 >= f2 ? ScalarMax{x1, f1, evals} : ScalarMax{x2, f2, evals};
}

}  // namespace unimodal_lab
