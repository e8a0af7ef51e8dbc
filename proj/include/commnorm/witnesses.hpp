#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commnorm/indices.hpp"
#include "commnorm/schatten.hpp"

namespace commnorm {

enum class WitnessKind { Nilpotent, SignFlip, Pauli, Tiled, StarPolygon, PaddedEven };

std::string_view to_string(WitnessKind kind);
std::optional<WitnessKind> witness_kind_from_string(std::string_view name);

// A named construction. `swapped` exchanges the roles of X and Y, which moves
// the construction's ratio from (p,q,r) to (p,r,q); SignFlip needs it to reach
// 2^(1-1/r).
struct WitnessRecipe {
  WitnessKind kind = WitnessKind::Nilpotent;
  int dim = 2;
  bool swapped = false;

  // "Nilpotent", "SignFlip~" for swapped.
  std::string name() const;
  bool operator==(const WitnessRecipe&) const = default;
};

// Throws DomainError when the recipe's size constraints are violated.
void validate(const WitnessRecipe& recipe);

// Two nonzero square matrices of equal size with the spectra of X, Y and
// Z = [X,Y] computed once at construction.
class MatrixPair {
 public:
  MatrixPair(ComplexMatrix x, ComplexMatrix y);

  const ComplexMatrix& x() const { return x_; }
  const ComplexMatrix& y() const { return y_; }
  const ComplexMatrix& z() const { return z_; }
  const SingularSpectrum& sigma_x() const { return sigma_x_; }
  const SingularSpectrum& sigma_y() const { return sigma_y_; }
  const SingularSpectrum& sigma_z() const { return sigma_z_; }
  Eigen::Index dim() const { return x_.rows(); }

 private:
  ComplexMatrix x_;
  ComplexMatrix y_;
  ComplexMatrix z_;
  SingularSpectrum sigma_x_;
  SingularSpectrum sigma_y_;
  SingularSpectrum sigma_z_;
};

MatrixPair build(const WitnessRecipe& recipe);

// ||[X,Y]||_p / (||X||_q ||Y||_r).
double ratio(const MatrixPair& pair, const NormIndex& p, const NormIndex& q, const NormIndex& r);

// Closed-form value of ratio(build(recipe), p, q, r), from the known spectra
// of each construction.
double predicted_ratio(const WitnessRecipe& recipe, const NormIndex& p, const NormIndex& q,
                       const NormIndex& r);

// Every valid recipe of size d, in the fixed order Nilpotent, SignFlip,
// SignFlip~, Pauli, Tiled, StarPolygon, PaddedEven.
std::vector<WitnessRecipe> applicable_recipes(int d);

// Recipe among applicable_recipes(d) with the largest measured ratio; ties
// (within 1e-12 relative) go to the earlier recipe. Requires d >= 2.
std::pair<WitnessRecipe, double> best_witness(const NormIndex& p, const NormIndex& q,
                                              const NormIndex& r, int d);

// Largest closed-form ratio over applicable_recipes(d), without building.
std::pair<WitnessRecipe, double> best_predicted_witness(const NormIndex& p, const NormIndex& q,
                                                        const NormIndex& r, int d);

// Common edge length sqrt(2 + 2 cos(pi/d)) of the {d; (d-1)/2} star polygon.
double star_edge_length(int d);

}  // namespace commnorm
