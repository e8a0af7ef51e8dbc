#pragma once

#include <cmath>
#include <utility>

namespace commnorm {

struct ScalarMaximum {
  double argmax = 0.0;
  double value = 0.0;
};

// Golden-section search for the maximum of a unimodal f on [lo, hi]. Stops
// after max_iters shrink steps or once the bracket is narrower than tol.
// The returned point was actually evaluated, so value is attained by f.
template <typename F>
ScalarMaximum golden_section_maximize(F&& f, double lo, double hi, int max_iters, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iters && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? ScalarMaximum{c, fc} : ScalarMaximum{d, fd};
}

// Scans `grid` equally spaced points of [lo, hi] (endpoints included), then
// refines around the best one with golden-section search on the neighbouring
// cells. Returns the best evaluated point.
template <typename F>
ScalarMaximum grid_then_golden_maximize(F&& f, double lo, double hi, int grid, int golden_iters,
                                        double tol) {
  if (grid < 2) grid = 2;
  const double h = (hi - lo) / (grid - 1);
  ScalarMaximum best{lo, f(lo)};
  int best_index = 0;
  for (int i = 1; i < grid; ++i) {
    const double x = (i == grid - 1) ? hi : lo + h * i;
    const double v = f(x);
    if (v > best.value) {
      best = {x, v};
      best_index = i;
    }
  }
  const double a = best_index == 0 ? lo : lo + h * (best_index - 1);
  const double b = best_index == grid - 1 ? hi : lo + h * (best_index + 1);
  const ScalarMaximum refined = golden_section_maximize(f, a, b, golden_iters, tol);
  return refined.value > best.value ? refined : best;
}

}  // namespace commnorm
