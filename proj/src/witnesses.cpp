#include "commnorm/witnesses.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "commnorm/errors.hpp"

namespace commnorm {

namespace {

constexpr std::array<std::pair<WitnessKind, std::string_view>, 6> kKindNames{{
    {WitnessKind::Nilpotent, "Nilpotent"},
    {WitnessKind::SignFlip, "SignFlip"},
    {WitnessKind::Pauli, "Pauli"},
    {WitnessKind::Tiled, "Tiled"},
    {WitnessKind::StarPolygon, "StarPolygon"},
    {WitnessKind::PaddedEven, "PaddedEven"},
}};

// 2x2 seeds; everything else embeds these in the top-left corner.
void place_seed(WitnessKind kind, ComplexMatrix& x, ComplexMatrix& y, Eigen::Index offset) {
  const Eigen::Index o = offset;
  switch (kind) {
    case WitnessKind::Nilpotent:
      x(o, o + 1) = 1.0;
      y(o + 1, o) = 1.0;
      break;
    case WitnessKind::SignFlip:
      x(o, o) = 1.0;
      x(o + 1, o + 1) = -1.0;
      y(o, o + 1) = 1.0;
      break;
    case WitnessKind::Pauli:
      x(o, o + 1) = 1.0;
      x(o + 1, o) = 1.0;
      y(o, o) = 1.0;
      y(o + 1, o + 1) = -1.0;
      break;
    default:
      break;
  }
}

}  // namespace

std::string_view to_string(WitnessKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<WitnessKind> witness_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string WitnessRecipe::name() const {
  std::string out(to_string(kind));
  if (swapped) out += "~";
  return out;
}

void validate(const WitnessRecipe& recipe) {
  const int d = recipe.dim;
  switch (recipe.kind) {
    case WitnessKind::Nilpotent:
    case WitnessKind::SignFlip:
    case WitnessKind::Pauli:
      if (d < 2) throw DomainError(recipe.name() + " needs dim >= 2");
      break;
    case WitnessKind::Tiled:
      if (d < 2 || d % 2 != 0) throw DomainError("Tiled needs an even dim >= 2");
      break;
    case WitnessKind::StarPolygon:
    case WitnessKind::PaddedEven:
      if (d < 3 || d % 2 == 0) throw DomainError(recipe.name() + " needs an odd dim >= 3");
      break;
  }
}

MatrixPair::MatrixPair(ComplexMatrix x, ComplexMatrix y)
    : x_(std::move(x)), y_(std::move(y)), z_(commutator(x_, y_)) {
  sigma_x_ = singular_values(x_);
  sigma_y_ = singular_values(y_);
  sigma_z_ = singular_values(z_);
  if (sigma_x_.largest() == 0.0 || sigma_y_.largest() == 0.0) {
    throw DomainError("matrix pair needs nonzero X and Y");
  }
}

MatrixPair build(const WitnessRecipe& recipe) {
  validate(recipe);
  const Eigen::Index d = recipe.dim;
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  ComplexMatrix y = ComplexMatrix::Zero(d, d);
  switch (recipe.kind) {
    case WitnessKind::Nilpotent:
    case WitnessKind::SignFlip:
    case WitnessKind::Pauli:
      place_seed(recipe.kind, x, y, 0);
      break;
    case WitnessKind::Tiled:
      for (Eigen::Index b = 0; b < d; b += 2) place_seed(WitnessKind::Pauli, x, y, b);
      break;
    case WitnessKind::PaddedEven:
      for (Eigen::Index b = 0; b + 1 < d; b += 2) place_seed(WitnessKind::Pauli, x, y, b);
      break;
    case WitnessKind::StarPolygon: {
      // X is the cyclic shift e_j -> e_{j+1}; Y puts the d-th roots of unity
      // on the diagonal stepped by m = (d-1)/2, so consecutive eigenvalues
      // are joined along the {d; m} star.
      const Eigen::Index m = (d - 1) / 2;
      for (Eigen::Index j = 0; j < d; ++j) {
        x((j + 1) % d, j) = 1.0;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * m) % d) /
                             static_cast<double>(d);
        y(j, j) = std::polar(1.0, angle);
      }
      break;
    }
  }
  if (recipe.swapped) std::swap(x, y);
  return MatrixPair(std::move(x), std::move(y));
}

double ratio(const MatrixPair& pair, const NormIndex& p, const NormIndex& q, const NormIndex& r) {
  const double nx = schatten_norm(pair.sigma_x(), q);
  const double ny = schatten_norm(pair.sigma_y(), r);
  if (nx == 0.0 || ny == 0.0) throw DomainError("ratio needs nonzero X and Y");
  return schatten_norm(pair.sigma_z(), p) / (nx * ny);
}

double star_edge_length(int d) {
  return std::sqrt(2.0 + 2.0 * std::cos(std::numbers::pi / static_cast<double>(d)));
}

double predicted_ratio(const WitnessRecipe& recipe, const NormIndex& p, const NormIndex& q,
                       const NormIndex& r) {
  validate(recipe);
  const double up = p.reciprocal_value();
  const double uq = (recipe.swapped ? r : q).reciprocal_value();
  const double ur = (recipe.swapped ? q : r).reciprocal_value();
  const double d = recipe.dim;
  const double s = up - uq - ur;
  switch (recipe.kind) {
    case WitnessKind::Nilpotent:
      return std::exp2(up);
    case WitnessKind::SignFlip:
      return std::exp2(1.0 - uq);
    case WitnessKind::Pauli:
      return std::exp2(1.0 + s);
    case WitnessKind::Tiled:
      return 2.0 * std::pow(d, s);
    case WitnessKind::StarPolygon:
      return star_edge_length(recipe.dim) * std::pow(d, s);
    case WitnessKind::PaddedEven:
      return 2.0 * std::pow(d - 1.0, s);
  }
  return 0.0;
}

std::vector<WitnessRecipe> applicable_recipes(int d) {
  std::vector<WitnessRecipe> out;
  if (d < 2) return out;
  out.push_back({WitnessKind::Nilpotent, d, false});
  out.push_back({WitnessKind::SignFlip, d, false});
  out.push_back({WitnessKind::SignFlip, d, true});
  out.push_back({WitnessKind::Pauli, d, false});
  if (d % 2 == 0) {
    out.push_back({WitnessKind::Tiled, d, false});
  } else {
    out.push_back({WitnessKind::StarPolygon, d, false});
    out.push_back({WitnessKind::PaddedEven, d, false});
  }
  return out;
}

namespace {

template <typename RatioFn>
std::pair<WitnessRecipe, double> argmax_recipe(int d, RatioFn&& fn) {
  if (d < 2) throw DomainError("witnesses need d >= 2");
  std::pair<WitnessRecipe, double> best{{}, -1.0};
  for (const WitnessRecipe& recipe : applicable_recipes(d)) {
    const double value = fn(recipe);
    if (value > best.second * (1.0 + 1e-12)) best = {recipe, value};
  }
  return best;
}

}  // namespace

std::pair<WitnessRecipe, double> best_witness(const NormIndex& p, const NormIndex& q,
                                              const NormIndex& r, int d) {
  return argmax_recipe(d, [&](const WitnessRecipe& recipe) { return ratio(build(recipe), p, q, r); });
}

std::pair<WitnessRecipe, double> best_predicted_witness(const NormIndex& p, const NormIndex& q,
                                                        const NormIndex& r, int d) {
  return argmax_recipe(d, [&](const WitnessRecipe& recipe) { return predicted_ratio(recipe, p, q, r); });
}

}  // namespace commnorm
