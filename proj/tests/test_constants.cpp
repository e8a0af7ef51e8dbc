#include <doctest.h>

#include <cmath>
#include <numbers>

#include "commnorm/constants.hpp"
#include "commnorm/errors.hpp"
#include "support.hpp"

using namespace commnorm;

namespace {

NormIndex idx(const char* s) { return NormIndex::parse(s); }

std::vector<Rational> quarter_grid() {
  return {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("classification on named points") {
  CHECK(classify(idx("2"), idx("2"), idx("2")) == Region::SegP);  // four-way tie
  CHECK(classify(idx("inf"), idx("inf"), idx("2")) == Region::SegQ);
  CHECK(classify(idx("inf"), idx("2"), idx("inf")) == Region::SegR);
  CHECK(classify(idx("2"), idx("3"), idx("3")) == Region::SegMixed);
  CHECK(classify(idx("4/3"), idx("4"), idx("4")) == Region::Pyramid);
  CHECK(classify(idx("1"), idx("inf"), idx("inf")) == Region::Pyramid);
  CHECK(classify(idx("1"), idx("2"), idx("2")) == Region::Pyramid);  // boundary plane
  CHECK(classify(idx("inf"), idx("1"), idx("1")) == Region::Octant);
  CHECK(classify(idx("4"), idx("3/2"), idx("3/2")) == Region::Octant);
  CHECK(classify(idx("2"), idx("1"), idx("1")) != Region::Octant);  // 1/p = 1/2 is outside
}

TEST_CASE("segment values equal the max formula on random triplets") {
  testing::IndexGen gen(41);
  int seen = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const NormIndex p = gen.index();
    const NormIndex q = gen.index();
    const NormIndex r = gen.index();
    const Region region = classify(p, q, r);
    if (region == Region::Pyramid || region == Region::Octant) continue;
    ++seen;
    const BoundResult res = constant(p, q, r);
    REQUIRE(res.value.has_value());
    CHECK(res.status == BoundStatus::Exact);
    CHECK_FALSE(res.dimension_dependent);
    CHECK(*res.value == doctest::Approx(testing::oracle_segment_value(
                            p.reciprocal_value(), q.reciprocal_value(), r.reciprocal_value())));
    REQUIRE(res.log2_value.has_value());
    CHECK(*res.log2_value == segment_exponents(p, q, r).max());
    CHECK(res.lower == *res.value);
    CHECK(res.upper == *res.value);
  }
  CHECK(seen > 100);
}

TEST_CASE("pyramid cases") {
  CHECK_THROWS_AS(constant(idx("1"), idx("inf"), idx("inf")), DimensionRequired);
  CHECK_THROWS_AS(constant(idx("1"), idx("inf"), idx("inf"), 1), DomainError);

  const BoundResult plane = constant(idx("1"), idx("2"), idx("2"));
  CHECK(plane.status == BoundStatus::Exact);
  CHECK(*plane.value == 2.0);

  const BoundResult even = constant(idx("1"), idx("inf"), idx("inf"), 4);
  CHECK(even.status == BoundStatus::ExactEvenDim);
  CHECK(*even.value == doctest::Approx(8.0));
  CHECK(even.dimension_dependent);
  CHECK(even.witness->kind == WitnessKind::Tiled);

  const BoundResult star = constant(idx("1"), idx("inf"), idx("inf"), 5);
  CHECK(star.status == BoundStatus::Exact);
  CHECK(*star.value == doctest::Approx(5.0 * std::sqrt(2.0 + 2.0 * std::cos(std::numbers::pi / 5))));

  const BoundResult odd = constant(idx("2"), idx("inf"), idx("inf"), 3);
  CHECK(odd.status == BoundStatus::Bracket);
  CHECK_FALSE(odd.value.has_value());
  CHECK(odd.lower == doctest::Approx(3.0));
  CHECK(odd.upper <= 2.0 * std::sqrt(3.0) + 1e-12);
  CHECK(odd.lower < odd.upper);
}

TEST_CASE("octant cases") {
  for (int d : {2, 3, 6}) {
    const BoundResult corner = constant(idx("inf"), idx("1"), idx("1"), d);
    CHECK(corner.status == BoundStatus::Exact);
    CHECK(*corner.value == doctest::Approx(std::sqrt(27.0) / 4.0));
  }
  const BoundResult inner = constant(idx("4"), idx("3/2"), idx("3/2"));
  CHECK(inner.status == BoundStatus::Bracket);
  CHECK(inner.lower >= std::pow(2.0, 0.25));
  CHECK(inner.upper <= std::sqrt(2.0) + 1e-12);
  CHECK(inner.lower <= inner.upper);
}

TEST_CASE("(p,p,r) closed form on the quarter grid") {
  for (const Rational& u : quarter_grid()) {
    for (const Rational& w : quarter_grid()) {
      const NormIndex p = NormIndex::from_reciprocal(u);
      const NormIndex r = NormIndex::from_reciprocal(w);
      const BoundResult res = constant(p, p, r, 2);
      REQUIRE(res.value.has_value());
      CHECK(*res.value == constant_ppr(p, r));
    }
  }
}

TEST_CASE("symmetry orbit") {
  const auto orbit = symmetry_orbit(idx("4"), idx("3/2"), idx("inf"));
  CHECK(orbit.size() >= 2);
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));
  CHECK(std::find(orbit.begin(), orbit.end(), IndexTriplet{idx("4"), idx("inf"), idx("3/2")}) != orbit.end());
  CHECK(IndexTriplet{idx("4"), idx("3/2"), idx("inf")}.to_string() == "(4, 3/2, inf)");

  testing::IndexGen gen(42);
  for (int trial = 0; trial < 100; ++trial) {
    const NormIndex p = gen.index();
    const NormIndex q = gen.index();
    const NormIndex r = gen.index();
    const auto members = symmetry_orbit(p, q, r);
    CHECK(members.size() <= 6);
    for (const IndexTriplet& t : members) {
      // Closure: every member generates the same orbit.
      CHECK(symmetry_orbit(t.p, t.q, t.r) == members);
      for (int d : {3, 4}) {
        const BoundResult a = constant(p, q, r, d);
        const BoundResult b = constant(t.p, t.q, t.r, d);
        CHECK(a.status == b.status);
        if (a.value && b.value) CHECK(*a.value == doctest::Approx(*b.value).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("soundness: witnesses never exceed upper bounds") {
  testing::IndexGen gen(43);
  for (int trial = 0; trial < 300; ++trial) {
    const NormIndex p = gen.index();
    const NormIndex q = gen.index();
    const NormIndex r = gen.index();
    const int d = 2 + trial % 6;
    const BoundResult res = constant(p, q, r, d);
    const double w = best_predicted_witness(p, q, r, d).second;
    CHECK(w <= res.upper * (1 + 1e-12));
    CHECK(res.lower <= res.upper * (1 + 1e-12));
    CHECK(res.lower >= w * (1 - 1e-12));
  }
}

}  // TEST_SUITE
