#include "commnorm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "commnorm/errors.hpp"
#include "commnorm/golden_section.hpp"

namespace commnorm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Circumference of one m-cycle whose first m-1 turning angles are `free`;
// the last one closes the cycle after k full turns.
double cycle_length(const std::vector<double>& free, int k) {
  double closing = kTwoPi * k;
  double total = 0.0;
  for (double x : free) {
    total += 2.0 * std::abs(std::sin(0.5 * x));
    closing -= x;
  }
  return total + 2.0 * std::abs(std::sin(0.5 * closing));
}

double cycle_length_gradient(const std::vector<double>& free, int k, std::vector<double>& grad) {
  double closing = kTwoPi * k;
  for (double x : free) closing -= x;
  const auto edge_slope = [](double x) {
    const double s = std::sin(0.5 * x);
    return (s >= 0.0 ? 1.0 : -1.0) * std::cos(0.5 * x);
  };
  const double closing_slope = edge_slope(closing);
  grad.resize(free.size());
  for (std::size_t j = 0; j < free.size(); ++j) grad[j] = edge_slope(free[j]) - closing_slope;
  return cycle_length(free, k);
}

double best_single_cycle(int m, const PolygonSearch& search, std::mt19937_64& rng) {
  if (m < 2) return 0.0;
  std::normal_distribution<double> noise(0.0, 0.5);
  double best = 0.0;
  std::vector<double> x(static_cast<std::size_t>(m - 1));
  std::vector<double> trial(x.size());
  std::vector<double> grad;
  for (int k = 0; k <= m; ++k) {
    for (int restart = 0; restart < search.restarts; ++restart) {
      for (double& xi : x) xi = kTwoPi * k / m + noise(rng);
      double step = 0.5;
      double value = cycle_length_gradient(x, k, grad);
      for (int it = 0; it < search.iters && step > 1e-14; ++it) {
        for (std::size_t j = 0; j < x.size(); ++j) trial[j] = x[j] + step * grad[j];
        const double candidate = cycle_length(trial, k);
        if (candidate > value) {
          x.swap(trial);
          value = cycle_length_gradient(x, k, grad);
          step = std::min(1.0, step * 1.5);
        } else {
          step *= 0.5;
        }
      }
      best = std::max(best, value);
    }
  }
  return best;
}

void collect_partitions(int remaining, int largest, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    collect_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

void PolygonConfig::validate() const {
  const std::size_t n = angles.size();
  if (permutation.size() != n) throw InputError("permutation size differs from point count");
  std::vector<bool> hit(n, false);
  for (int target : permutation) {
    if (target < 0 || static_cast<std::size_t>(target) >= n || hit[static_cast<std::size_t>(target)]) {
      throw InputError("permutation is not a bijection");
    }
    hit[static_cast<std::size_t>(target)] = true;
  }
}

double PolygonConfig::circumference() const {
  validate();
  double total = 0.0;
  for (std::size_t j = 0; j < angles.size(); ++j) {
    const auto a = std::polar(1.0, angles[j]);
    const auto b = std::polar(1.0, angles[static_cast<std::size_t>(permutation[j])]);
    total += std::abs(b - a);
  }
  return total;
}

double max_polygon_length(int n) {
  if (n < 2) throw DomainError("polygon length needs n >= 2, got " + std::to_string(n));
  if (n % 2 == 0) return 2.0 * n;
  return n * std::sqrt(2.0 + 2.0 * std::cos(kPi / n));
}

double max_winding_length(int n) {
  if (n < 2) throw DomainError("polygon length needs n >= 2, got " + std::to_string(n));
  double best = 0.0;
  for (int k = 0; k <= n; ++k) best = std::max(best, 2.0 * n * std::sin(k * kPi / n));
  return best;
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  if (n >= 1) collect_partitions(n, n, current, out);
  return out;
}

double brute_force_polygon(int n, const PolygonSearch& search) {
  if (n < 2) throw DomainError("polygon search needs n >= 2");
  if (n > kMaxBruteForcePolygon) {
    throw DomainError("polygon brute force refuses n > " + std::to_string(kMaxBruteForcePolygon));
  }
  // The circumference of a permutation only depends on its cycle type, and
  // disjoint cycles are optimized independently.
  std::mt19937_64 rng(search.seed);
  std::vector<double> per_cycle(static_cast<std::size_t>(n + 1), 0.0);
  for (int m = 2; m <= n; ++m) per_cycle[static_cast<std::size_t>(m)] = best_single_cycle(m, search, rng);
  double best = 0.0;
  for (const auto& partition : integer_partitions(n)) {
    double total = 0.0;
    for (int part : partition) total += per_cycle[static_cast<std::size_t>(part)];
    best = std::max(best, total);
  }
  return best;
}

double cos_product_extrema(double x, int m, Extremum want) {
  if (m == 2) {
    const double half = 0.5 * x;
    return want == Extremum::Max ? std::cos(half) * std::cos(half) : -std::sin(half) * std::sin(half);
  }
  if (m == 3) {
    if (want == Extremum::Max) {
      const double reduced = x - kTwoPi * std::round(x / kTwoPi);  // [-pi, pi]
      return std::pow(std::cos(reduced / 3.0), 3);
    }
    const double reduced = x - kTwoPi * std::floor(x / kTwoPi);  // [0, 2pi)
    return -std::pow(std::cos((reduced - kPi) / 3.0), 3);
  }
  throw DomainError("cos_product_extrema supports m = 2 or 3, got " + std::to_string(m));
}

double c_inf11_objective(double x) {
  return std::pow(std::cos(x / 3.0), 3) + std::pow(std::cos((x - kPi) / 3.0), 3);
}

CornerMaximum c_inf11_maximize() {
  const ScalarMaximum coarse = golden_section_maximize(c_inf11_objective, 0.0, kPi, 200, 1e-10);
  // The objective is flat at its peak, so golden section alone only pins x
  // to ~1e-8. Finish by bisecting the derivative around the coarse point.
  const auto slope = [](double x) {
    const double a = std::cos(x / 3.0);
    const double b = std::cos((x - kPi) / 3.0);
    return -a * a * std::sin(x / 3.0) - b * b * std::sin((x - kPi) / 3.0);
  };
  double lo = std::max(0.0, coarse.argmax - 1e-6);
  double hi = std::min(kPi, coarse.argmax + 1e-6);
  if (slope(lo) > 0.0 && slope(hi) < 0.0) {
    for (int it = 0; it < 100 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (slope(mid) > 0.0 ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    return {x, c_inf11_objective(x)};
  }
  return {coarse.argmax, coarse.value};
}

}  // namespace commnorm
