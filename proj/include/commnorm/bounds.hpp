#pragma once

#include <optional>

#include "commnorm/indices.hpp"

namespace commnorm {

// A bound ||T x||_p <= M ||x||_q. When M is a power of two with a known
// rational exponent, log2_m carries it so that interpolation stays exact.
struct InterpolationBase {
  NormIndex p;
  NormIndex q;
  double m = 1.0;
  std::optional<Rational> log2_m;

  static InterpolationBase with_constant(NormIndex p, NormIndex q, double m);
  static InterpolationBase with_power_of_two(NormIndex p, NormIndex q, Rational log2_m);
};

// Two-point Riesz-Thorin combination: indices interpolated on reciprocals,
// constant M0^(1-theta) M1^theta. theta outside [0,1] throws DomainError.
InterpolationBase riesz_thorin(const InterpolationBase& base0, const InterpolationBase& base1,
                               const Rational& theta);

// sqrt(27)/4, the value at (inf, 1, 1).
double corner_inf11();

// Interpolation bound 2^(1/p) (sqrt(27)/4)^(1 - 2/p) on C_{p,1,1}; p >= 2.
double upper_p11(const NormIndex& p);

// ((sqrt(27)/4)^p + (sqrt(5)/4)^p)^(1/p) on C_{p,1,1}; p >= 2.
double upper_p11_refined(const NormIndex& p);

// The singular values sigma(phi) of the rank-one commutator family, for
// phi in [0, pi/4].
struct SigmaPair {
  double first = 0.0;
  double second = 0.0;
};
SigmaPair rank_one_commutator_sigma(double phi);

inline constexpr int kDefaultP11Grid = 2048;

// max(2^(1/p), max_phi ||sigma(phi)||_p). Every evaluated phi corresponds to
// an actual matrix pair, so the result is a certified lower bound.
double lower_p11(const NormIndex& p, int grid = kDefaultP11Grid);

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

// d^(1/p) sqrt(2+2cos(pi/d)): star polygon lower bound on C_{p,inf,inf}.
double lower_pinfinf_star(const NormIndex& p, int d);
// 2 (d-1)^(1/p): padded even lower bound on C_{p,inf,inf}.
double lower_pinfinf_padded(const NormIndex& p, int d);
// (d sqrt(2+2cos(pi/d)))^(1/p) 2^(1-1/p): interpolation upper bound.
double upper_pinfinf(const NormIndex& p, int d);

// Lower/upper bracket on C_{p,inf,inf} for odd d >= 3.
Bracket bounds_pinfinf(const NormIndex& p, int d);

// Index p0 at which the two lower bounds of bounds_pinfinf cross, found by
// bisection on 1/p in [0, 1]; nullopt when they do not cross.
std::optional<double> pinfinf_crossing_index(int d);

}  // namespace commnorm
