#pragma once

#include <optional>
#include <set>
#include <string_view>

#include "commnorm/indices.hpp"
#include "commnorm/witnesses.hpp"

namespace commnorm {

inline constexpr double kDefaultMaximalityTolerance = 1e-8;

// Extra conditions on the 2x2 core of a maximal pair. Rank1* are the
// single-rank items, Unitary* the "multiple of a unitary" items, and
// None2x2Extra is the bare core with nothing else required.
enum class MaximalityCondition { Rank1X, Rank1Y, Rank1Z, UnitaryX, UnitaryY, UnitaryZ, None2x2Extra };

std::string_view to_string(MaximalityCondition condition);

struct CompressionResult {
  bool found = false;
  int support_dim = 0;  // dimension of the joint column space of X, X*, Y, Y*
  ComplexMatrix x0;
  ComplexMatrix y0;
  ComplexMatrix z0;
  double residual = 0.0;  // largest part of X or Y acting on or landing in the complement
};

// Looks for a unitary U with U X U* = X0 + 0 and U Y U* = Y0 + 0, X0 and Y0
// of size 2x2.
CompressionResult joint_compress(const MatrixPair& pair, double tol = kDefaultMaximalityTolerance);

struct CoreCheck {
  bool passed = false;
  CompressionResult compression;
  double trace_x = 0.0;   // |tr X|
  double trace_y = 0.0;   // |tr Y|
  double trace_yx = 0.0;  // |tr(Y* X)|
  double trace_limit = 0.0;
};

// Joint 2x2 compressibility plus tr X = tr Y = tr(Y* X) = 0.
CoreCheck evaluate_core(const MatrixPair& pair, double tol = kDefaultMaximalityTolerance);
bool check_core(const MatrixPair& pair, double tol = kDefaultMaximalityTolerance);

struct ConditionCheck {
  bool holds = false;
  double residual = 0.0;  // relative to sigma_1 of the matrix concerned
};

ConditionCheck evaluate_condition(const MatrixPair& pair, MaximalityCondition condition,
                                  double tol = kDefaultMaximalityTolerance);
bool check_condition(const MatrixPair& pair, MaximalityCondition condition,
                     double tol = kDefaultMaximalityTolerance);

// Conditions every (p,q,r)-maximal pair must satisfy on top of the core,
// where that follows unambiguously; nullopt elsewhere (octant, pyramid,
// boundary indices, facets the derivation does not reach).
std::optional<std::set<MaximalityCondition>> required_conditions(const NormIndex& p,
                                                                 const NormIndex& q,
                                                                 const NormIndex& r);

}  // namespace commnorm
