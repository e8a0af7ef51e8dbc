#include "commnorm/maximality.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "commnorm/constants.hpp"

namespace commnorm {

namespace {

double sigma_at(const SingularSpectrum& s, std::size_t i) {
  return i < s.sigma.size() ? s.sigma[i] : 0.0;
}

ConditionCheck rank_one(const SingularSpectrum& s, double tol) {
  const double top = s.largest();
  if (top == 0.0) return {false, 1.0};
  const double residual = sigma_at(s, 1) / top;
  return {residual <= tol, residual};
}

ConditionCheck unitary_multiple(const SingularSpectrum& s, double tol) {
  const double top = s.largest();
  if (top == 0.0) return {false, 1.0};
  const double residual = std::max((top - sigma_at(s, 1)) / top, sigma_at(s, 2) / top);
  return {residual <= tol, residual};
}

}  // namespace

std::string_view to_string(MaximalityCondition condition) {
  switch (condition) {
    case MaximalityCondition::Rank1X: return "Rank1X";
    case MaximalityCondition::Rank1Y: return "Rank1Y";
    case MaximalityCondition::Rank1Z: return "Rank1Z";
    case MaximalityCondition::UnitaryX: return "UnitaryX";
    case MaximalityCondition::UnitaryY: return "UnitaryY";
    case MaximalityCondition::UnitaryZ: return "UnitaryZ";
    case MaximalityCondition::None2x2Extra: return "None2x2Extra";
  }
  return "?";
}

CompressionResult joint_compress(const MatrixPair& pair, double tol) {
  const Eigen::Index d = pair.dim();
  std::vector<Eigen::VectorXcd> columns;
  columns.reserve(static_cast<std::size_t>(4 * d));
  for (const ComplexMatrix* m : {&pair.x(), &pair.y()}) {
    const ComplexMatrix adjoint = m->adjoint();
    for (Eigen::Index j = 0; j < d; ++j) {
      columns.emplace_back(m->col(j));
      columns.emplace_back(adjoint.col(j));
    }
  }
  double largest = 0.0;
  for (const auto& c : columns) largest = std::max(largest, c.norm());

  // Modified Gram-Schmidt with one re-orthogonalization pass.
  std::vector<Eigen::VectorXcd> basis;
  for (Eigen::VectorXcd v : columns) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) v -= b.dot(v) * b;
    }
    const double n = v.norm();
    if (n > tol * largest) basis.push_back(v / n);
  }

  CompressionResult result;
  result.support_dim = static_cast<int>(basis.size());
  if (basis.size() > 2) basis.resize(2);
  // Pad to two dimensions with the standard vectors farthest from the span.
  while (basis.size() < 2) {
    Eigen::VectorXcd best_v;
    double best_n = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Unit(d, i);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) e -= b.dot(e) * b;
      }
      if (e.norm() > best_n) {
        best_n = e.norm();
        best_v = e;
      }
    }
    basis.push_back(best_v / best_n);
  }

  ComplexMatrix q(d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) q.col(static_cast<Eigen::Index>(k)) = basis[k];
  const ComplexMatrix complement = ComplexMatrix::Identity(d, d) - q * q.adjoint();
  const double scale = largest > 0.0 ? largest : 1.0;
  double residual = 0.0;
  for (const ComplexMatrix* m : {&pair.x(), &pair.y()}) {
    residual = std::max(residual, (*m * complement).norm() / scale);
    residual = std::max(residual, (complement * *m).norm() / scale);
  }
  result.residual = residual;
  result.found = result.support_dim <= 2 && residual <= tol;
  result.x0 = q.adjoint() * pair.x() * q;
  result.y0 = q.adjoint() * pair.y() * q;
  result.z0 = commutator(result.x0, result.y0);
  return result;
}

CoreCheck evaluate_core(const MatrixPair& pair, double tol) {
  CoreCheck check;
  check.compression = joint_compress(pair, tol);
  // Traces are basis invariant, so they are taken on the full matrices.
  check.trace_x = std::abs(pair.x().trace());
  check.trace_y = std::abs(pair.y().trace());
  check.trace_yx = std::abs(trace_inner(pair.x(), pair.y()));
  const double nx = pair.x().norm();
  const double ny = pair.y().norm();
  check.trace_limit = tol * (nx + ny + nx * ny);
  check.passed = check.compression.found && check.trace_x <= check.trace_limit &&
                 check.trace_y <= check.trace_limit && check.trace_yx <= check.trace_limit;
  return check;
}

bool check_core(const MatrixPair& pair, double tol) { return evaluate_core(pair, tol).passed; }

ConditionCheck evaluate_condition(const MatrixPair& pair, MaximalityCondition condition,
                                  double tol) {
  switch (condition) {
    case MaximalityCondition::Rank1X: return rank_one(pair.sigma_x(), tol);
    case MaximalityCondition::Rank1Y: return rank_one(pair.sigma_y(), tol);
    case MaximalityCondition::Rank1Z: return rank_one(pair.sigma_z(), tol);
    case MaximalityCondition::UnitaryX: return unitary_multiple(pair.sigma_x(), tol);
    case MaximalityCondition::UnitaryY: return unitary_multiple(pair.sigma_y(), tol);
    case MaximalityCondition::UnitaryZ: return unitary_multiple(pair.sigma_z(), tol);
    case MaximalityCondition::None2x2Extra: return {true, 0.0};
  }
  return {false, 1.0};
}

bool check_condition(const MatrixPair& pair, MaximalityCondition condition, double tol) {
  return evaluate_condition(pair, condition, tol).holds;
}

std::optional<std::set<MaximalityCondition>> required_conditions(const NormIndex& p,
                                                                 const NormIndex& q,
                                                                 const NormIndex& r) {
  using C = MaximalityCondition;
  for (const NormIndex* index : {&p, &q, &r}) {
    if (index->is_infinite() || index->reciprocal() == 1) return std::nullopt;
  }
  const Region region = classify(p, q, r);
  if (region == Region::Pyramid || region == Region::Octant) return std::nullopt;

  const SegmentExponents e = segment_exponents(p, q, r);
  if (e.p == e.q && e.q == e.r && e.r == e.mixed) return std::set<C>{C::None2x2Extra};

  // The constant stays flat when q grows (r grows, p shrinks) exactly when
  // the exponents moving with it are not the active maximum. Flatness means
  // the value was reached by monotonicity, which forces rank one on X (Y, Z).
  std::set<C> conditions;
  if (std::max(e.p, e.r) > std::max(e.q, e.mixed)) conditions.insert(C::Rank1X);
  if (std::max(e.p, e.q) > std::max(e.r, e.mixed)) conditions.insert(C::Rank1Y);
  if (std::max(e.q, e.r) > std::max(e.p, e.mixed)) conditions.insert(C::Rank1Z);
  if (!conditions.empty()) return conditions;

  const bool above_p = e.mixed > e.p;
  const bool above_q = e.mixed > e.q;
  const bool above_r = e.mixed > e.r;
  if (above_p && above_q && above_r) return std::set<C>{C::UnitaryX, C::UnitaryY, C::UnitaryZ};
  // Facets where the mixed segment meets exactly one other.
  if (e.mixed == e.p && above_q && above_r) return std::set<C>{C::UnitaryZ};
  if (e.mixed == e.q && above_p && above_r) return std::set<C>{C::UnitaryX};
  if (e.mixed == e.r && above_p && above_q) return std::set<C>{C::UnitaryY};
  return std::nullopt;
}

}  // namespace commnorm
