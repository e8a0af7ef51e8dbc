#include <doctest.h>

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "commnorm/errors.hpp"
#include "commnorm/geometry.hpp"

using namespace commnorm;

namespace {

constexpr double kPi = std::numbers::pi;

// Maximizes (p,u)(v,a)(b,q) - (p,a)(b,u)(v,q) over six unit vectors in R^3
// by projected gradient ascent from random starts. Flipping p flips the sign,
// so the maximum equals the maximum of the absolute value.
double six_vector_maximum(int restarts, std::uint64_t seed) {
  using V = Eigen::Vector3d;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  double best = 0.0;
  for (int run = 0; run < restarts; ++run) {
    std::array<V, 6> w;  // p q u v a b
    for (V& x : w) x = V(g(rng), g(rng), g(rng)).normalized();
    const auto value = [](const std::array<V, 6>& s) {
      const auto& [p, q, u, v, a, b] = s;
      return p.dot(u) * v.dot(a) * b.dot(q) - p.dot(a) * b.dot(u) * v.dot(q);
    };
    double step = 0.1;
    double current = value(w);
    for (int it = 0; it < 3000 && step > 1e-13; ++it) {
      const auto& [p, q, u, v, a, b] = w;
      const std::array<V, 6> grad = {
          u * v.dot(a) * b.dot(q) - a * b.dot(u) * v.dot(q),
          b * p.dot(u) * v.dot(a) - v * p.dot(a) * b.dot(u),
          p * v.dot(a) * b.dot(q) - b * p.dot(a) * v.dot(q),
          a * p.dot(u) * b.dot(q) - q * p.dot(a) * b.dot(u),
          v * p.dot(u) * b.dot(q) - p * b.dot(u) * v.dot(q),
          q * p.dot(u) * v.dot(a) - u * p.dot(a) * v.dot(q),
      };
      std::array<V, 6> trial;
      for (int k = 0; k < 6; ++k) trial[k] = (w[k] + step * grad[k]).normalized();
      const double next = value(trial);
      if (next > current) {
        w = trial;
        current = next;
        step *= 1.2;
      } else {
        step *= 0.5;
      }
    }
    best = std::max(best, current);
  }
  return best;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("closed-form polygon lengths") {
  CHECK(max_polygon_length(2) == doctest::Approx(4.0));
  CHECK(max_polygon_length(3) == doctest::Approx(3.0 * std::sqrt(3.0)));
  CHECK(max_polygon_length(6) == doctest::Approx(12.0));
  CHECK_THROWS_AS(max_polygon_length(1), DomainError);
  for (int n = 2; n <= 40; ++n) CHECK(max_winding_length(n) == doctest::Approx(max_polygon_length(n)));
}

TEST_CASE("superadditivity and the odd defect") {
  for (int n = 4; n <= 12; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      CHECK(max_polygon_length(n) >= max_polygon_length(k) + max_polygon_length(n - k) - 1e-12);
    }
  }
  double last = -INFINITY;
  for (int n = 3; n <= 41; n += 2) {
    const double defect = max_polygon_length(n) - 2.0 * n;
    CHECK(defect >= last);
    CHECK(defect < 0.0);
    last = defect;
  }
}

TEST_CASE("explicit configurations") {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      PolygonConfig c;
      for (int j = 0; j < n; ++j) {
        c.angles.push_back(2.0 * kPi * j / n);
        c.permutation.push_back((j + k) % n);
      }
      CHECK(c.circumference() == doctest::Approx(2.0 * n * std::sin(k * kPi / n)));
      CHECK(c.circumference() <= max_polygon_length(n) + 1e-12);
    }
  }
  PolygonConfig bad{{0.0, 1.0}, {0, 0}};
  CHECK_THROWS_AS(bad.validate(), InputError);
  PolygonConfig short_perm{{0.0, 1.0}, {0}};
  CHECK_THROWS_AS(short_perm.circumference(), InputError);
}

TEST_CASE("integer partitions") {
  const int counts[] = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) {
    const auto parts = integer_partitions(n);
    CHECK(parts.size() == static_cast<std::size_t>(counts[n - 1]));
    for (const auto& part : parts) {
      CHECK(std::is_sorted(part.rbegin(), part.rend()));
      int sum = 0;
      for (int x : part) sum += x;
      CHECK(sum == n);
    }
  }
}

TEST_CASE("brute force oracle matches the formula for small n") {
  for (int n = 2; n <= 6; ++n) CHECK(brute_force_polygon(n) == doctest::Approx(max_polygon_length(n)).epsilon(1e-7));
  CHECK_THROWS_AS(brute_force_polygon(9), DomainError);
  CHECK(brute_force_polygon(5, {4, 4000, 7}) <= max_polygon_length(5) + 1e-9);
}

TEST_CASE("cosine product extrema against a grid") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xs(-3 * kPi, 3 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = xs(rng);
    double hi = -INFINITY;
    double lo = INFINITY;
    for (double a = 0.0; a < 2 * kPi; a += 1e-3) {
      const double v = std::cos(a) * std::cos(x - a);
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    }
    CHECK(cos_product_extrema(x, 2, Extremum::Max) == doctest::Approx(hi).epsilon(1e-6));
    CHECK(cos_product_extrema(x, 2, Extremum::Min) == doctest::Approx(lo).epsilon(1e-6));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const double x = xs(rng);
    double hi = -INFINITY;
    double lo = INFINITY;
    for (double a = 0.0; a < 2 * kPi; a += 5e-3) {
      for (double b = 0.0; b < 2 * kPi; b += 5e-3) {
        const double v = std::cos(a) * std::cos(b) * std::cos(x - a - b);
        hi = std::max(hi, v);
        lo = std::min(lo, v);
      }
    }
    CHECK(std::abs(cos_product_extrema(x, 3, Extremum::Max) - hi) < 1e-4);
    CHECK(std::abs(cos_product_extrema(x, 3, Extremum::Min) - lo) < 1e-4);
  }
  CHECK(cos_product_extrema(0.0, 2, Extremum::Max) == doctest::Approx(1.0));
  CHECK(cos_product_extrema(kPi / 2, 3, Extremum::Max) == doctest::Approx(3.0 * std::sqrt(3.0) / 8.0));
  CHECK_THROWS_AS(cos_product_extrema(0.0, 4, Extremum::Max), DomainError);
}

TEST_CASE("corner objective") {
  CHECK(c_inf11_objective(0.0) == doctest::Approx(1.125));
  CHECK(c_inf11_objective(kPi) == doctest::Approx(1.125));
  const CornerMaximum m = c_inf11_maximize();
  CHECK(std::abs(m.x_star - kPi / 2) < 1e-9);
  CHECK(std::abs(m.value - std::sqrt(27.0) / 4.0) < 1e-9);
}

TEST_CASE("corner value agrees with the six-vector maximization") {
  CHECK(std::abs(six_vector_maximum(40, 1) - c_inf11_maximize().value) < 1e-3);
}

}  // TEST_SUITE
