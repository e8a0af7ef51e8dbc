#pragma once

// Shared generators and independent reference computations for the tests.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "commnorm/indices.hpp"
#include "commnorm/schatten.hpp"

namespace testing {

using commnorm::ComplexMatrix;
using commnorm::NormIndex;
using commnorm::Rational;

// Reciprocals drawn from a small set of denominators, with the endpoints 0
// and 1 (p = inf and p = 1) over-represented since most special cases sit
// there.
class IndexGen {
 public:
  explicit IndexGen(std::uint64_t seed) : rng_(seed) {}

  Rational reciprocal() {
    std::uniform_int_distribution<int> pick(0, 9);
    const int k = pick(rng_);
    if (k == 0) return Rational(0);
    if (k == 1) return Rational(1);
    static const int dens[] = {2, 3, 4, 5, 6, 8, 12};
    std::uniform_int_distribution<int> den_pick(0, 6);
    const int den = dens[den_pick(rng_)];
    std::uniform_int_distribution<int> num(0, den);
    return Rational(num(rng_), den);
  }

  NormIndex index() { return NormIndex::from_reciprocal(reciprocal()); }

  ComplexMatrix matrix(int d) {
    std::normal_distribution<double> g;
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = {g(rng_), g(rng_)};
    return m;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Schatten norm through the eigenvalues of A*A, a route that shares nothing
// with the SVD used by the library.
inline double oracle_schatten(const ComplexMatrix& a, double p) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(a.adjoint() * a, Eigen::EigenvaluesOnly);
  double top = 0.0;
  std::vector<double> s;
  for (int i = 0; i < eig.eigenvalues().size(); ++i) {
    s.push_back(std::sqrt(std::max(0.0, eig.eigenvalues()(i))));
    top = std::max(top, s.back());
  }
  if (std::isinf(p)) return top;
  double sum = 0.0;
  for (double v : s) sum += std::pow(v, p);
  return std::pow(sum, 1.0 / p);
}

// max{2^(1/p), 2^(1-1/q), 2^(1-1/r), 2^(1+1/p-1/q-1/r)} in plain doubles.
inline double oracle_segment_value(double up, double uq, double ur) {
  return std::exp2(std::max({up, 1.0 - uq, 1.0 - ur, 1.0 + up - uq - ur}));
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace testing
