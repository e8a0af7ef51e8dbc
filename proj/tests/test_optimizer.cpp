#include <doctest.h>

#include <cmath>

#include "commnorm/errors.hpp"
#include "commnorm/optimizer.hpp"
#include "support.hpp"

using namespace commnorm;

namespace {

NormIndex idx(const char* s) { return NormIndex::parse(s); }

OptimizerConfig quick(int restarts) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  return cfg;
}

}  // namespace

TEST_SUITE("optimizer") {

TEST_CASE("configuration checks") {
  OptimizerConfig cfg;
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.smoothing_cap = 1.5;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  CHECK_THROWS_AS(maximize_ratio(idx("2"), idx("2"), idx("2"), 1, quick(1)), DomainError);
}

TEST_CASE("reaches known constants from random starts") {
  const SearchReport r222 = maximize_ratio(idx("2"), idx("2"), idx("2"), 3, quick(30));
  CHECK(r222.best_ratio >= std::sqrt(2.0) - 1e-3);
  CHECK(r222.best_ratio <= std::sqrt(2.0) + 1e-8);

  const SearchReport r444 = maximize_ratio(idx("4"), idx("4"), idx("4"), 2, quick(30));
  CHECK(std::abs(r444.best_ratio - std::pow(2.0, 0.75)) < 1e-3);

  // No recipe reaches the corner, so this one has to be found.
  const SearchReport corner = maximize_ratio(idx("inf"), idx("1"), idx("1"), 3, quick(200));
  CHECK(corner.best_start_name == "random");
  CHECK(std::abs(corner.best_ratio - std::sqrt(27.0) / 4.0) < 1e-3);
  CHECK(corner.best_ratio <= std::sqrt(27.0) / 4.0 + 1e-8);
}

TEST_CASE("verdicts") {
  const SearchReport nil = verify_constant(idx("1"), idx("1"), idx("2"), 2, quick(2));
  CHECK(nil.verdict == Verdict::AttainedWithin);
  CHECK(nil.best_ratio == doctest::Approx(2.0));

  const SearchReport star = verify_constant(idx("1"), idx("inf"), idx("inf"), 3, quick(2));
  CHECK(star.verdict == Verdict::AttainedWithin);
  CHECK(star.best_start_name == "StarPolygon");

  const SearchReport octant = verify_constant(idx("4"), idx("3/2"), idx("3/2"), 2, quick(10));
  CHECK(octant.verdict == Verdict::BracketProbe);
  CHECK(octant.best_ratio >= std::pow(2.0, 0.25));
  CHECK(octant.best_ratio <= std::sqrt(2.0) + 1e-8);

  CHECK_THROWS_AS(verify_constant(idx("2"), idx("inf"), idx("inf"), 1, quick(1)), DomainError);
}

TEST_CASE("determinism across runs and thread counts") {
  OptimizerConfig cfg = quick(6);
  cfg.seed = 99;
  cfg.threads = 1;
  const SearchReport a = maximize_ratio(idx("3"), idx("2"), idx("3/2"), 3, cfg);
  const SearchReport b = maximize_ratio(idx("3"), idx("2"), idx("3/2"), 3, cfg);
  cfg.threads = 3;
  const SearchReport c = maximize_ratio(idx("3"), idx("2"), idx("3/2"), 3, cfg);
  for (const SearchReport* other : {&b, &c}) {
    CHECK(a.best_ratio == other->best_ratio);
    CHECK(a.best_start == other->best_start);
    CHECK(a.iterations_used == other->iterations_used);
    CHECK(a.best_pair.x() == other->best_pair.x());
    CHECK(a.best_pair.y() == other->best_pair.y());
  }
  cfg.seed = 100;
  const SearchReport d = maximize_ratio(idx("3"), idx("2"), idx("3/2"), 3, cfg);
  CHECK(d.total_starts == a.total_starts);
}

TEST_CASE("warm starts dominate and nothing beats an exact constant") {
  testing::IndexGen gen(61);
  OptimizerConfig cfg = quick(2);
  cfg.max_iters = 150;
  cfg.polish_cap = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const NormIndex p = gen.index();
    const NormIndex q = gen.index();
    const NormIndex r = gen.index();
    const int d = 2 + trial % 3;
    const SearchReport rep = maximize_ratio(p, q, r, d, cfg);
    CHECK(rep.best_ratio >= best_witness(p, q, r, d).second * (1 - 1e-12));
    CHECK(rep.best_ratio <= rep.predicted.upper * (1 + 1e-8));
    CHECK(rep.verdict != Verdict::ExceedsBound);
    CHECK(ratio(rep.best_pair, p, q, r) == doctest::Approx(rep.best_ratio).epsilon(1e-12));
  }
}

TEST_CASE("finite-difference and analytic gradients both climb") {
  OptimizerConfig cfg = quick(8);
  cfg.gradient = GradientMode::FiniteDifference;
  cfg.max_iters = 400;
  const SearchReport fd = maximize_ratio(idx("inf"), idx("1"), idx("1"), 2, cfg);
  cfg.gradient = GradientMode::Analytic;
  const SearchReport an = maximize_ratio(idx("inf"), idx("1"), idx("1"), 2, cfg);
  // Every recipe stays at or below 1 here, so both runs must have climbed.
  CHECK(fd.best_ratio > 1.25);
  CHECK(an.best_ratio > 1.25);
  CHECK(fd.best_ratio <= std::sqrt(27.0) / 4.0 + 1e-8);
}

}  // TEST_SUITE
