#include "commnorm/constants.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "commnorm/bounds.hpp"
#include "commnorm/errors.hpp"

namespace commnorm {

namespace {

BoundResult exact_power_of_two(Rational exponent, Region region) {
  BoundResult result;
  result.status = BoundStatus::Exact;
  result.value = std::exp2(to_double(exponent));
  result.lower = result.upper = *result.value;
  result.region = region;
  result.log2_value = std::move(exponent);
  return result;
}

BoundResult exact_value(double value, BoundStatus status, Region region) {
  BoundResult result;
  result.status = status;
  result.value = value;
  result.lower = result.upper = value;
  result.region = region;
  return result;
}

BoundResult bracket(double lower, double upper, Region region) {
  BoundResult result;
  result.status = BoundStatus::Bracket;
  result.lower = lower;
  result.upper = upper;
  result.region = region;
  return result;
}

// Witness lower bound at the triplet itself, recorded on the result.
void apply_witness_lower(BoundResult& result, const NormIndex& p, const NormIndex& q,
                         const NormIndex& r, int d) {
  const auto [recipe, value] = best_predicted_witness(p, q, r, d);
  if (value >= result.lower) {
    result.lower = value;
    result.witness = recipe;
  }
}

std::optional<IndexTriplet> find_in_orbit(const std::vector<IndexTriplet>& orbit,
                                          const NormIndex& q, const NormIndex& r) {
  for (const IndexTriplet& t : orbit) {
    if (t.q == q && t.r == r) return t;
  }
  return std::nullopt;
}

BoundResult pyramid_constant(const NormIndex& p, const NormIndex& q, const NormIndex& r,
                             std::optional<int> d) {
  const Rational s = pyramid_exponent(p, q, r);
  if (s == 0) {
    // On the plane 1/p = 1/q + 1/r the pyramid formula and the segment
    // formula both give 2 for every d.
    BoundResult result = exact_power_of_two(Rational(1), Region::Pyramid);
    result.witness = WitnessRecipe{WitnessKind::Pauli, d.value_or(2), false};
    result.note = "boundary plane 1/p = 1/q + 1/r; attained at every d >= 2";
    return result;
  }
  if (!d) throw DimensionRequired();
  const int dim = *d;
  const double upper = 2.0 * std::pow(static_cast<double>(dim), to_double(s));
  if (dim % 2 == 0) {
    BoundResult result = exact_value(upper, BoundStatus::ExactEvenDim, Region::Pyramid);
    result.dimension_dependent = true;
    result.witness = WitnessRecipe{WitnessKind::Tiled, dim, false};
    result.note = "even d: attained by the tiled Pauli pair";
    return result;
  }
  const NormIndex one = NormIndex::from_value(Rational(1));
  const NormIndex inf = NormIndex::infinity();
  if (p == one && q == inf && r == inf) {
    BoundResult result =
        exact_value(static_cast<double>(dim) * star_edge_length(dim), BoundStatus::Exact,
                    Region::Pyramid);
    result.dimension_dependent = true;
    result.witness = WitnessRecipe{WitnessKind::StarPolygon, dim, false};
    result.note = "odd d corner: maximal star polygon circumference";
    return result;
  }
  BoundResult result = bracket(0.0, upper, Region::Pyramid);
  result.dimension_dependent = true;
  result.note = "odd d: 2 d^(1/p-1/q-1/r) is only an upper bound";
  if (const auto member = find_in_orbit(symmetry_orbit(p, q, r), inf, inf)) {
    result.upper = std::min(result.upper, upper_pinfinf(member->p, dim));
    result.note += "; tightened by interpolation from the odd-d corner";
  }
  apply_witness_lower(result, p, q, r, dim);
  return result;
}

BoundResult octant_constant(const NormIndex& p, const NormIndex& q, const NormIndex& r,
                            std::optional<int> d) {
  const NormIndex one = NormIndex::from_value(Rational(1));
  const auto member = find_in_orbit(symmetry_orbit(p, q, r), one, one);
  if (member && member->p.is_infinite()) {
    BoundResult result = exact_value(corner_inf11(), BoundStatus::Exact, Region::Octant);
    result.note = "corner (inf,1,1); attained by rank-one pairs";
    return result;
  }
  BoundResult result = bracket(0.0, std::sqrt(2.0), Region::Octant);
  result.note = "open octant: sharp value unknown";
  apply_witness_lower(result, p, q, r, d.value_or(2));
  if (member) {
    const double curve = lower_p11(member->p);
    if (curve > result.lower) {
      result.lower = curve;
      result.witness.reset();
    }
    result.upper = std::min(result.upper, upper_p11_refined(member->p));
    result.note += "; bracket from the q = r = 1 line via symmetry";
  }
  return result;
}

}  // namespace

std::string IndexTriplet::to_string() const {
  return "(" + p.to_string() + ", " + q.to_string() + ", " + r.to_string() + ")";
}

bool operator<(const IndexTriplet& a, const IndexTriplet& b) {
  return std::tie(a.p.reciprocal(), a.q.reciprocal(), a.r.reciprocal()) <
         std::tie(b.p.reciprocal(), b.q.reciprocal(), b.r.reciprocal());
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::SegP: return "SegP";
    case Region::SegQ: return "SegQ";
    case Region::SegR: return "SegR";
    case Region::SegMixed: return "SegMixed";
    case Region::Pyramid: return "Pyramid";
    case Region::Octant: return "Octant";
  }
  return "?";
}

std::string_view to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::Exact: return "Exact";
    case BoundStatus::ExactEvenDim: return "ExactEvenDim";
    case BoundStatus::Bracket: return "Bracket";
  }
  return "?";
}

const Rational& SegmentExponents::max() const {
  const Rational* best = &p;
  for (const Rational* candidate : {&q, &r, &mixed}) {
    if (*candidate > *best) best = candidate;
  }
  return *best;
}

SegmentExponents segment_exponents(const NormIndex& p, const NormIndex& q, const NormIndex& r) {
  const Rational& up = p.reciprocal();
  const Rational& uq = q.reciprocal();
  const Rational& ur = r.reciprocal();
  return {up, Rational(1) - uq, Rational(1) - ur, Rational(1) + up - uq - ur};
}

Rational pyramid_exponent(const NormIndex& p, const NormIndex& q, const NormIndex& r) {
  return p.reciprocal() - q.reciprocal() - r.reciprocal();
}

Region classify(const NormIndex& p, const NormIndex& q, const NormIndex& r) {
  if (pyramid_exponent(p, q, r) >= 0) return Region::Pyramid;
  const Rational half(1, 2);
  if (p.reciprocal() < half && q.reciprocal() > half && r.reciprocal() > half) {
    return Region::Octant;
  }
  const SegmentExponents e = segment_exponents(p, q, r);
  const Rational& best = e.max();
  if (e.p == best) return Region::SegP;
  if (e.q == best) return Region::SegQ;
  if (e.r == best) return Region::SegR;
  return Region::SegMixed;
}

BoundResult constant(const NormIndex& p, const NormIndex& q, const NormIndex& r,
                     std::optional<int> d) {
  if (d && *d < 2) throw DomainError("dimension must be at least 2");
  const Region region = classify(p, q, r);
  if (region == Region::Pyramid) return pyramid_constant(p, q, r, d);
  if (region == Region::Octant) return octant_constant(p, q, r, d);

  BoundResult result = exact_power_of_two(segment_exponents(p, q, r).max(), region);
  const int dim = d.value_or(2);
  switch (region) {
    case Region::SegP: result.witness = WitnessRecipe{WitnessKind::Nilpotent, dim, false}; break;
    case Region::SegQ: result.witness = WitnessRecipe{WitnessKind::SignFlip, dim, false}; break;
    case Region::SegR: result.witness = WitnessRecipe{WitnessKind::SignFlip, dim, true}; break;
    default: result.witness = WitnessRecipe{WitnessKind::Pauli, dim, false}; break;
  }
  result.note = "dimension independent; attained at every d >= 2";
  return result;
}

double constant_ppr(const NormIndex& p, const NormIndex& r) {
  const Rational& up = p.reciprocal();
  const Rational exponent = std::max({up, Rational(1) - up, Rational(1) - r.reciprocal()});
  return std::exp2(to_double(exponent));
}

std::vector<IndexTriplet> symmetry_orbit(const NormIndex& p, const NormIndex& q,
                                         const NormIndex& r) {
  std::set<IndexTriplet> seen;
  std::vector<IndexTriplet> frontier{{p, q, r}};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    const IndexTriplet t = frontier.back();
    frontier.pop_back();
    const IndexTriplet images[] = {
        {t.p, t.r, t.q},
        {conjugate(t.r), t.q, conjugate(t.p)},
        {conjugate(t.q), conjugate(t.p), t.r},
    };
    for (const IndexTriplet& image : images) {
      if (seen.insert(image).second) frontier.push_back(image);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace commnorm
