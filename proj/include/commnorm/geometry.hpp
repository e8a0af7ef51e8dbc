#pragma once

#include <cstdint>
#include <vector>

namespace commnorm {

// Points e^{i angles[j]} on the unit circle joined by j -> permutation[j].
struct PolygonConfig {
  std::vector<double> angles;
  std::vector<int> permutation;

  // Throws InputError unless permutation is a bijection of {0..n-1} matching
  // the number of angles.
  void validate() const;
  // Sum of |e^{i angle[perm[j]]} - e^{i angle[j]}|.
  double circumference() const;
};

// Maximal total circumference L(n) of polygons through n points on the unit
// circle: 2n for even n, n sqrt(2 + 2 cos(pi/n)) for odd n. n >= 2.
double max_polygon_length(int n);

// max over k of 2n sin(k pi / n), the single-cycle bound before the choice
// of winding number is resolved.
double max_winding_length(int n);

struct PolygonSearch {
  int restarts = 16;
  int iters = 4000;
  std::uint64_t seed = 0;
};

inline constexpr int kMaxBruteForcePolygon = 8;

// Numerical lower bound on L(n): ascends the circumference of every cycle
// length from random angle configurations and combines cycle lengths over all
// integer partitions of n. Refuses n > 8.
double brute_force_polygon(int n, const PolygonSearch& search = {});

// Integer partitions of n into parts >= 1, parts non-increasing.
std::vector<std::vector<int>> integer_partitions(int n);

enum class Extremum { Max, Min };

// Extremes of cos(a) cos(b) (m = 2) or cos(a) cos(b) cos(c) (m = 3) over
// angles summing to x. Throws DomainError for m outside {2, 3}.
double cos_product_extrema(double x, int m, Extremum want);

// cos^3(x/3) + cos^3((x - pi)/3).
double c_inf11_objective(double x);

struct CornerMaximum {
  double x_star = 0.0;
  double value = 0.0;
};

// Golden-section maximization of c_inf11_objective on [0, pi].
CornerMaximum c_inf11_maximize();

}  // namespace commnorm
