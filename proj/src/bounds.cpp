#include "commnorm/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "commnorm/errors.hpp"
#include "commnorm/golden_section.hpp"
#include "commnorm/schatten.hpp"
#include "commnorm/witnesses.hpp"

namespace commnorm {

namespace {

void require_p_at_least_two(const NormIndex& p, const char* what) {
  if (p.reciprocal() > Rational(1, 2)) {
    throw DomainError(std::string(what) + " needs p >= 2, got " + p.to_string());
  }
}

void require_odd_dim(int d) {
  if (d < 3 || d % 2 == 0) {
    throw DomainError("C_{p,inf,inf} bracket needs odd d >= 3, got " + std::to_string(d));
  }
}

}  // namespace

InterpolationBase InterpolationBase::with_constant(NormIndex p, NormIndex q, double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("interpolation constant must be positive");
  return {std::move(p), std::move(q), m, std::nullopt};
}

InterpolationBase InterpolationBase::with_power_of_two(NormIndex p, NormIndex q, Rational log2_m) {
  const double m = std::exp2(to_double(log2_m));
  return {std::move(p), std::move(q), m, std::move(log2_m)};
}

InterpolationBase riesz_thorin(const InterpolationBase& base0, const InterpolationBase& base1,
                               const Rational& theta) {
  NormIndex p = interpolate_index(base0.p, base1.p, theta);
  NormIndex q = interpolate_index(base0.q, base1.q, theta);
  if (base0.log2_m && base1.log2_m) {
    Rational exponent = (Rational(1) - theta) * *base0.log2_m + theta * *base1.log2_m;
    return InterpolationBase::with_power_of_two(std::move(p), std::move(q), std::move(exponent));
  }
  const double t = to_double(theta);
  const double m = std::exp((1.0 - t) * std::log(base0.m) + t * std::log(base1.m));
  return InterpolationBase::with_constant(std::move(p), std::move(q), m);
}

double corner_inf11() { return std::sqrt(27.0) / 4.0; }

double upper_p11(const NormIndex& p) {
  require_p_at_least_two(p, "upper_p11");
  const double u = p.reciprocal_value();
  return std::exp2(u) * std::pow(corner_inf11(), 1.0 - 2.0 * u);
}

double upper_p11_refined(const NormIndex& p) {
  require_p_at_least_two(p, "upper_p11_refined");
  // sqrt(2 - 27/16) = sqrt(5)/4 is the largest second singular value left
  // once the first one reaches sqrt(27)/4 under the p = 2 budget.
  const std::array<double, 2> atoms{corner_inf11(), std::sqrt(5.0) / 4.0};
  return lp_norm_from_reciprocal(atoms, p.reciprocal_value());
}

SigmaPair rank_one_commutator_sigma(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double cs = c * s;
  const double scale = std::sqrt(2.0) * std::sqrt(std::max(0.0, 8.0 * cs)) / (1.0 + 2.0 * cs);
  return {scale * c, scale * s};
}

double lower_p11(const NormIndex& p, int grid) {
  const double u = p.reciprocal_value();
  const auto objective = [u](double phi) {
    const SigmaPair sigma = rank_one_commutator_sigma(phi);
    const std::array<double, 2> values{sigma.first, sigma.second};
    return lp_norm_from_reciprocal(values, u);
  };
  const ScalarMaximum best =
      grid_then_golden_maximize(objective, 0.0, std::numbers::pi / 4.0, grid, 60, 1e-12);
  // Rounded down by a few ulps so that the bound stays certified; at large p
  // it meets upper_p11_refined, which is the same norm in closed form.
  constexpr double kRoundDown = 1.0 - 16.0 * std::numeric_limits<double>::epsilon();
  return std::max(std::exp2(u), best.value) * kRoundDown;
}

double lower_pinfinf_star(const NormIndex& p, int d) {
  require_odd_dim(d);
  return std::pow(static_cast<double>(d), p.reciprocal_value()) * star_edge_length(d);
}

double lower_pinfinf_padded(const NormIndex& p, int d) {
  require_odd_dim(d);
  return 2.0 * std::pow(static_cast<double>(d - 1), p.reciprocal_value());
}

double upper_pinfinf(const NormIndex& p, int d) {
  require_odd_dim(d);
  const double u = p.reciprocal_value();
  return std::pow(static_cast<double>(d) * star_edge_length(d), u) * std::exp2(1.0 - u);
}

Bracket bounds_pinfinf(const NormIndex& p, int d) {
  return {std::max(lower_pinfinf_star(p, d), lower_pinfinf_padded(p, d)), upper_pinfinf(p, d)};
}

std::optional<double> pinfinf_crossing_index(int d) {
  require_odd_dim(d);
  // g(u) = log(star) - log(padded) is affine in u = 1/p.
  const auto g = [d](double u) {
    return u * std::log(static_cast<double>(d)) + std::log(star_edge_length(d)) - std::log(2.0) -
           u * std::log(static_cast<double>(d - 1));
  };
  double lo = 0.0;
  double hi = 1.0;
  if ((g(lo) > 0.0) == (g(hi) > 0.0)) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((g(mid) > 0.0) == (g(lo) > 0.0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 1.0 / (0.5 * (lo + hi));
}

}  // namespace commnorm
