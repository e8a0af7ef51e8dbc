#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commnorm/indices.hpp"
#include "commnorm/witnesses.hpp"

namespace commnorm {

struct IndexTriplet {
  NormIndex p;
  NormIndex q;
  NormIndex r;

  std::string to_string() const;  // "(4, 3/2, inf)"
  bool operator==(const IndexTriplet&) const = default;
};

// Lexicographic on the reciprocals; only used to give orbits a stable order.
bool operator<(const IndexTriplet& a, const IndexTriplet& b);

// The four dimension-free segments carry the exponent that wins the max
// (in this order): SegP 1/p, SegQ 1-1/q, SegR 1-1/r, SegMixed 1+1/p-1/q-1/r.
enum class Region { SegP, SegQ, SegR, SegMixed, Pyramid, Octant };
enum class BoundStatus { Exact, ExactEvenDim, Bracket };

std::string_view to_string(Region region);
std::string_view to_string(BoundStatus status);

struct SegmentExponents {
  Rational p;      // 1/p
  Rational q;      // 1 - 1/q
  Rational r;      // 1 - 1/r
  Rational mixed;  // 1 + 1/p - 1/q - 1/r

  const Rational& max() const;
};

SegmentExponents segment_exponents(const NormIndex& p, const NormIndex& q, const NormIndex& r);

// 1/p - 1/q - 1/r; non-negative exactly on the pyramid.
Rational pyramid_exponent(const NormIndex& p, const NormIndex& q, const NormIndex& r);

struct BoundResult {
  BoundStatus status = BoundStatus::Bracket;
  std::optional<double> value;  // set for Exact and ExactEvenDim
  double lower = 0.0;
  double upper = 0.0;
  Region region = Region::SegP;
  bool dimension_dependent = false;
  std::optional<WitnessRecipe> witness;
  // Exponent e with value = 2^e whenever the value is a power of two.
  std::optional<Rational> log2_value;
  std::string note;

  bool is_exact() const { return status != BoundStatus::Bracket; }
};

// Exact-rational region decision; ties among segment exponents go to the
// earlier label.
Region classify(const NormIndex& p, const NormIndex& q, const NormIndex& r);

// Sharp value or best known bracket for C_{p,q,r} on d x d matrices. Throws
// DimensionRequired inside the open pyramid when d is absent, DomainError
// when d < 2.
BoundResult constant(const NormIndex& p, const NormIndex& q, const NormIndex& r,
                     std::optional<int> d = std::nullopt);

// max{2^(1/p), 2^(1-1/p), 2^(1-1/r)}.
double constant_ppr(const NormIndex& p, const NormIndex& r);

// Closure of {(p,q,r)} under (p,q,r) -> (p,r,q), (r',q,p'), (q',p',r).
std::vector<IndexTriplet> symmetry_orbit(const NormIndex& p, const NormIndex& q,
                                         const NormIndex& r);

}  // namespace commnorm
