#include <doctest.h>

#include <cmath>

#include "commnorm/constants.hpp"
#include "commnorm/maximality.hpp"
#include "support.hpp"

using namespace commnorm;
using C = MaximalityCondition;

namespace {

NormIndex idx(const char* s) { return NormIndex::parse(s); }

MatrixPair padded(WitnessKind kind, int d) { return build({kind, d}); }

}  // namespace

TEST_SUITE("maximality") {

TEST_CASE("padded seeds compress back to 2x2") {
  const MatrixPair seed = padded(WitnessKind::Nilpotent, 2);
  const MatrixPair big = padded(WitnessKind::Nilpotent, 5);
  const CompressionResult c = joint_compress(big);
  CHECK(c.found);
  CHECK(c.support_dim == 2);
  CHECK(c.residual <= 1e-12);
  // Same pair up to a change of basis: spectra and the commutator agree.
  const auto sx = singular_values(c.x0).sigma;
  const auto sz = singular_values(c.z0).sigma;
  CHECK(sx[0] == doctest::Approx(seed.sigma_x().sigma[0]));
  CHECK(sx[1] == doctest::Approx(0.0));
  CHECK(sz[0] == doctest::Approx(seed.sigma_z().sigma[0]));
  CHECK(sz[1] == doctest::Approx(seed.sigma_z().sigma[1]));
}

TEST_CASE("the core holds for the 2x2 witnesses and fails otherwise") {
  for (WitnessKind k : {WitnessKind::Nilpotent, WitnessKind::SignFlip, WitnessKind::Pauli}) {
    CHECK(check_core(padded(k, 4)));
  }
  CHECK_FALSE(check_core(padded(WitnessKind::Tiled, 4)));  // support is 4-dimensional
  CHECK_FALSE(check_core(padded(WitnessKind::StarPolygon, 3)));
  testing::IndexGen gen(71);
  const MatrixPair random(gen.matrix(3), gen.matrix(3));
  const CoreCheck core = evaluate_core(random);
  CHECK_FALSE(core.passed);
  CHECK(core.compression.support_dim == 3);
  // Identity shifts keep the 2x2 support but break tr X = 0.
  ComplexMatrix x = padded(WitnessKind::Nilpotent, 2).x() + ComplexMatrix::Identity(2, 2);
  const CoreCheck shifted = evaluate_core(MatrixPair(x, padded(WitnessKind::Nilpotent, 2).y()));
  CHECK(shifted.compression.found);
  CHECK_FALSE(shifted.passed);
  CHECK(shifted.trace_x == doctest::Approx(2.0));
}

TEST_CASE("rank and unitary conditions on the seeds") {
  const MatrixPair pauli = padded(WitnessKind::Pauli, 4);
  for (C c : {C::UnitaryX, C::UnitaryY, C::UnitaryZ}) CHECK(check_condition(pauli, c));
  CHECK_FALSE(check_condition(pauli, C::Rank1X));
  const MatrixPair nil = padded(WitnessKind::Nilpotent, 3);
  CHECK(check_condition(nil, C::Rank1X));
  CHECK(check_condition(nil, C::Rank1Y));
  CHECK(check_condition(nil, C::UnitaryZ));
  CHECK_FALSE(check_condition(nil, C::UnitaryX));
  const ConditionCheck residual = evaluate_condition(nil, C::UnitaryX);
  CHECK(residual.residual == doctest::Approx(1.0));
  CHECK(check_condition(nil, C::None2x2Extra));
}

TEST_CASE("perturbation breaks maximality") {
  testing::IndexGen gen(72);
  const MatrixPair nil = padded(WitnessKind::Nilpotent, 2);
  const ComplexMatrix dx = gen.matrix(2);
  const ComplexMatrix dy = gen.matrix(2);
  const MatrixPair bent(nil.x() + 0.05 * dx / dx.norm(), nil.y() + 0.05 * dy / dy.norm());
  const double r = ratio(bent, idx("2"), idx("2"), idx("2"));
  CHECK((!check_core(bent) || r < std::sqrt(2.0) - 1e-3));
}

TEST_CASE("required conditions") {
  CHECK(required_conditions(idx("2"), idx("2"), idx("2")) == std::set<C>{C::None2x2Extra});
  CHECK_FALSE(required_conditions(idx("inf"), idx("2"), idx("2")).has_value());
  CHECK_FALSE(required_conditions(idx("2"), idx("1"), idx("3")).has_value());
  CHECK_FALSE(required_conditions(idx("4"), idx("3/2"), idx("3/2")).has_value());  // octant
  CHECK_FALSE(required_conditions(idx("1"), idx("inf"), idx("inf")).has_value());  // pyramid
  CHECK(required_conditions(idx("3/2"), idx("2"), idx("2")) == std::set<C>{C::UnitaryZ});
  CHECK(required_conditions(idx("4"), idx("2"), idx("2")) == std::set<C>{C::Rank1Z});
}

TEST_CASE("witnesses attaining the constant meet the required conditions") {
  testing::IndexGen gen(73);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const NormIndex p = gen.index();
    const NormIndex q = gen.index();
    const NormIndex r = gen.index();
    const auto required = required_conditions(p, q, r);
    if (!required) continue;
    const BoundResult bound = constant(p, q, r, 2);
    for (const WitnessRecipe& recipe : applicable_recipes(2)) {
      const MatrixPair pair = build(recipe);
      if (ratio(pair, p, q, r) < *bound.value * (1 - 1e-12)) continue;
      ++checked;
      CHECK(check_core(pair));
      for (C c : *required) {
        INFO(recipe.name(), " at ", IndexTriplet{p, q, r}.to_string(), " needs ", to_string(c));
        CHECK(check_condition(pair, c));
      }
    }
  }
  CHECK(checked > 20);
}

}  // TEST_SUITE
