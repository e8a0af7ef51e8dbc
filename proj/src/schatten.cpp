#include "commnorm/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "commnorm/errors.hpp"

namespace commnorm {

std::size_t SingularSpectrum::rank(double rel_tol) const {
  const double threshold = rel_tol * largest();
  return static_cast<std::size_t>(std::count_if(
      sigma.begin(), sigma.end(), [&](double s) { return s > threshold && s > 0.0; }));
}

SingularSpectrum singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) throw InputError("singular values of an empty matrix");
  if (!m.allFinite()) throw InputError("matrix has non-finite entries");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const Eigen::VectorXd& values = svd.singularValues();
  SingularSpectrum out;
  out.sigma.assign(values.data(), values.data() + values.size());
  std::sort(out.sigma.begin(), out.sigma.end(), std::greater<>());
  return out;
}

double lp_norm_from_reciprocal(std::span<const double> values, double u) {
  double largest = 0.0;
  for (double v : values) largest = std::max(largest, std::abs(v));
  if (largest == 0.0) return 0.0;
  if (u == 0.0) return largest;
  if (u == 1.0) {
    double sum = 0.0;
    for (double v : values) sum += std::abs(v);
    return sum;
  }
  const double p = 1.0 / u;
  double sum = 0.0;
  for (double v : values) {
    const double ratio = std::abs(v) / largest;
    if (ratio > 0.0) sum += std::exp(p * std::log(ratio));
  }
  return largest * std::exp(u * std::log(sum));
}

double schatten_norm(const SingularSpectrum& spectrum, const NormIndex& p) {
  return lp_norm_from_reciprocal(spectrum.sigma, p.reciprocal_value());
}

double schatten_norm(const ComplexMatrix& m, const NormIndex& p) {
  return schatten_norm(singular_values(m), p);
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw InputError("commutator needs square matrices of equal size, got " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " and " +
                     std::to_string(y.rows()) + "x" + std::to_string(y.cols()));
  }
  return x * y - y * x;
}

Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("trace inner product needs equal shapes");
  }
  return (b.conjugate().cwiseProduct(a)).sum();
}

}  // namespace commnorm
