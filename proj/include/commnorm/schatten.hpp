#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "commnorm/indices.hpp"

namespace commnorm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Default relative threshold for deciding rank: sigma_i > 1e-9 * sigma_1.
inline constexpr double kDefaultRankTolerance = 1e-9;

// Singular values in descending order.
struct SingularSpectrum {
  std::vector<double> sigma;

  double largest() const { return sigma.empty() ? 0.0 : sigma.front(); }
  // Number of singular values above rel_tol * sigma_1.
  std::size_t rank(double rel_tol = kDefaultRankTolerance) const;
};

// Throws InputError on an empty matrix or non-finite entries.
SingularSpectrum singular_values(const ComplexMatrix& m);

// l_p norm of a non-negative vector, p given by its reciprocal u (u = 0 is the
// max norm). Evaluated as s_1 * (sum (s_i/s_1)^p)^(1/p) so that p up to 1e3
// and beyond neither overflows nor underflows to a wrong answer.
double lp_norm_from_reciprocal(std::span<const double> values, double u);

double schatten_norm(const SingularSpectrum& spectrum, const NormIndex& p);
double schatten_norm(const ComplexMatrix& m, const NormIndex& p);

// XY - YX. Both must be square of the same size.
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

// <A, B> = tr(B* A).
Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace commnorm
