#include "commnorm/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "commnorm/errors.hpp"

namespace commnorm {

namespace {

constexpr double kExceedSlack = 1e-6;

struct Indices {
  double p = 0.0;  // reciprocals
  double q = 0.0;
  double r = 0.0;
};

double log_norm(const ComplexMatrix& m, double u) {
  const double n = lp_norm_from_reciprocal(singular_values(m).sigma, u);
  return n > 0.0 ? std::log(n) : -std::numeric_limits<double>::infinity();
}

// log ||A||_p and its gradient U diag(s^(p-1)) V* / sum(s^p), for 0 < u < 1.
double log_norm_gradient(const ComplexMatrix& a, double u, ComplexMatrix& grad) {
  const Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  if (!(top > 0.0)) {
    grad.setZero(a.rows(), a.cols());
    return -std::numeric_limits<double>::infinity();
  }
  const double p = 1.0 / u;
  Eigen::VectorXd w(s.size());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double ratio = s(i) / top;
    w(i) = ratio > 0.0 ? std::pow(ratio, p - 1.0) : 0.0;
    sum += w(i) * ratio;
  }
  grad = svd.matrixU() * (w / (top * sum)).asDiagonal() * svd.matrixV().adjoint();
  return std::log(top) + u * std::log(sum);
}

struct StartResult {
  double best_ratio = -1.0;
  ComplexMatrix x;
  ComplexMatrix y;
  long iterations = 0;
};

class Ascent {
 public:
  Ascent(Indices truth, int d, const OptimizerConfig& cfg) : truth_(truth), d_(d), cfg_(cfg) {
    for (double cap = cfg.warmup_cap; cap < cfg.smoothing_cap; cap *= 4.0) caps_.push_back(cap);
    main_stage_ = caps_.size();
    caps_.push_back(cfg.smoothing_cap);
    for (double cap = 4.0 * cfg.smoothing_cap; cap <= cfg.polish_cap; cap *= 4.0) caps_.push_back(cap);
  }

  StartResult run(ComplexMatrix x, ComplexMatrix y) const {
    StartResult out;
    score(x, y, out);
    for (std::size_t stage = 0; stage < caps_.size(); ++stage) {
      const Indices smooth{smooth_reciprocal(truth_.p, caps_[stage]),
                           smooth_reciprocal(truth_.q, caps_[stage]),
                           smooth_reciprocal(truth_.r, caps_[stage])};
      const int iters = stage == main_stage_ ? cfg_.max_iters : std::max(1, cfg_.max_iters / 4);
      const double step = stage <= main_stage_ ? cfg_.step_init : cfg_.step_init * 0.01;
      climb(smooth, iters, step, x, y, out);
    }
    return out;
  }

 private:
  static double smooth_reciprocal(double u, double cap) {
    const double lo = 1.0 / cap;
    return std::clamp(u, lo, 1.0 - lo);
  }

  void climb(const Indices& smooth, int iters, double step, ComplexMatrix& x, ComplexMatrix& y,
             StartResult& out) const {
    normalize(smooth, x, y);
    ComplexMatrix gx(d_, d_);
    ComplexMatrix gy(d_, d_);
    double value = evaluate(smooth, x, y, gx, gy);
    std::vector<double> history{value};
    for (int it = 0; it < iters && step > 1e-14; ++it) {
      ++out.iterations;
      const double gnorm = std::sqrt(gx.squaredNorm() + gy.squaredNorm());
      if (!(gnorm > 0.0) || !std::isfinite(gnorm)) break;
      const double pnorm = std::sqrt(x.squaredNorm() + y.squaredNorm());
      ComplexMatrix tx = x + (step * pnorm / gnorm) * gx;
      ComplexMatrix ty = y + (step * pnorm / gnorm) * gy;
      normalize(smooth, tx, ty);
      ComplexMatrix tgx(d_, d_);
      ComplexMatrix tgy(d_, d_);
      const double candidate = evaluate(smooth, tx, ty, tgx, tgy);
      if (candidate > value) {
        x = std::move(tx);
        y = std::move(ty);
        gx = std::move(tgx);
        gy = std::move(tgy);
        value = candidate;
        score(x, y, out);
        step = std::min(1.0, step * 1.25);
      } else {
        step *= 0.5;
      }
      history.push_back(value);
      const auto window = static_cast<std::size_t>(cfg_.stall_window);
      if (history.size() > window && value - history[history.size() - 1 - window] < cfg_.tol) break;
    }
  }

  // Smoothed objective; fills the ascent direction for X and Y.
  double evaluate(const Indices& smooth, const ComplexMatrix& x, const ComplexMatrix& y,
                  ComplexMatrix& gx, ComplexMatrix& gy) const {
    if (cfg_.gradient == GradientMode::FiniteDifference) {
      fd_gradient(
          x, [&](const ComplexMatrix& w) { return log_norm(commutator(w, y), smooth.p) - log_norm(w, smooth.q); },
          gx);
      fd_gradient(
          y, [&](const ComplexMatrix& w) { return log_norm(commutator(x, w), smooth.p) - log_norm(w, smooth.r); },
          gy);
      return log_norm(commutator(x, y), smooth.p) - log_norm(x, smooth.q) - log_norm(y, smooth.r);
    }
    ComplexMatrix gz;
    ComplexMatrix nx;
    ComplexMatrix ny;
    const double value = log_norm_gradient(commutator(x, y), smooth.p, gz) -
                         log_norm_gradient(x, smooth.q, nx) - log_norm_gradient(y, smooth.r, ny);
    // Adjoints of dX -> dX Y - Y dX and dY -> X dY - dY X.
    gx = gz * y.adjoint() - y.adjoint() * gz - nx;
    gy = x.adjoint() * gz - gz * x.adjoint() - ny;
    return value;
  }

  // Central differences in every real and imaginary entry. Only the moved
  // matrix and the commutator change, so the other norm drops out.
  template <typename Partial>
  void fd_gradient(ComplexMatrix work, Partial&& partial, ComplexMatrix& grad) const {
    const double h = 1e-5 * std::max(work.norm() / static_cast<double>(d_), 1e-300);
    for (Eigen::Index i = 0; i < d_; ++i) {
      for (Eigen::Index j = 0; j < d_; ++j) {
        const Complex saved = work(i, j);
        double slope[2];
        for (int part = 0; part < 2; ++part) {
          const Complex dir = part == 0 ? Complex(h, 0.0) : Complex(0.0, h);
          work(i, j) = saved + dir;
          const double plus = partial(work);
          work(i, j) = saved - dir;
          const double minus = partial(work);
          slope[part] = (plus - minus) / (2.0 * h);
        }
        work(i, j) = saved;
        grad(i, j) = Complex(slope[0], slope[1]);
      }
    }
  }

  // Unit smoothed q-norm for X and r-norm for Y; the ratio is invariant.
  static void normalize(const Indices& smooth, ComplexMatrix& x, ComplexMatrix& y) {
    const double nx = std::exp(log_norm(x, smooth.q));
    const double ny = std::exp(log_norm(y, smooth.r));
    if (nx > 0.0 && std::isfinite(nx)) x /= nx;
    if (ny > 0.0 && std::isfinite(ny)) y /= ny;
  }

  void score(const ComplexMatrix& x, const ComplexMatrix& y, StartResult& out) const {
    const double nx = lp_norm_from_reciprocal(singular_values(x).sigma, truth_.q);
    const double ny = lp_norm_from_reciprocal(singular_values(y).sigma, truth_.r);
    if (!(nx > 0.0) || !(ny > 0.0)) return;
    const double nz = lp_norm_from_reciprocal(singular_values(commutator(x, y)).sigma, truth_.p);
    const double value = nz / (nx * ny);
    if (value > out.best_ratio) {
      out.best_ratio = value;
      out.x = x;
      out.y = y;
    }
  }

  Indices truth_;
  Eigen::Index d_;
  const OptimizerConfig& cfg_;
  std::vector<double> caps_;
  std::size_t main_stage_ = 0;
};

ComplexMatrix random_matrix(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 0 || max_iters <= 0 || !(step_init > 0.0) || !(tol > 0.0) || stall_window <= 0 ||
      !(epsilon > 0.0) || !(smoothing_cap > 2.0) || !(warmup_cap > 2.0) || std::isnan(polish_cap)) {
    throw DomainError("optimizer configuration values must be positive");
  }
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::AttainedWithin: return "AttainedWithin";
    case Verdict::BelowBound: return "BelowBound";
    case Verdict::ExceedsBound: return "ExceedsBound";
    case Verdict::BracketProbe: return "BracketProbe";
  }
  return "?";
}

SearchReport maximize_ratio(const NormIndex& p, const NormIndex& q, const NormIndex& r, int d,
                            const OptimizerConfig& cfg) {
  cfg.validate();
  if (d < 2) throw DomainError("optimizer needs d >= 2");
  BoundResult predicted = constant(p, q, r, d);

  const Indices truth{p.reciprocal_value(), q.reciprocal_value(), r.reciprocal_value()};
  const Ascent ascent(truth, d, cfg);

  const std::vector<WitnessRecipe> warm = applicable_recipes(d);
  const int warm_count = static_cast<int>(warm.size());
  const int total = warm_count + cfg.restarts;
  std::vector<StartResult> results(static_cast<std::size_t>(total));

  const auto run_start = [&](int index) {
    ComplexMatrix x;
    ComplexMatrix y;
    if (index < warm_count) {
      const MatrixPair pair = build(warm[static_cast<std::size_t>(index)]);
      x = pair.x();
      y = pair.y();
    } else {
      std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed & 0xffffffffu),
                        static_cast<std::uint32_t>(cfg.seed >> 32), static_cast<std::uint32_t>(index)};
      std::mt19937_64 rng(seq);
      x = random_matrix(d, rng);
      y = random_matrix(d, rng);
    }
    results[static_cast<std::size_t>(index)] = ascent.run(std::move(x), std::move(y));
  };

  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max(total, 1)));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int i = next++; i < total; i = next++) run_start(i);
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Reduction in start order: ties keep the lowest index.
  int best = -1;
  long iterations = 0;
  for (int i = 0; i < total; ++i) {
    const StartResult& res = results[static_cast<std::size_t>(i)];
    iterations += res.iterations;
    if (res.best_ratio < 0.0) continue;
    if (best < 0 || res.best_ratio > results[static_cast<std::size_t>(best)].best_ratio) best = i;
  }
  if (best < 0) throw DomainError("optimizer found no admissible pair");
  const StartResult& winner = results[static_cast<std::size_t>(best)];

  const double best_ratio = winner.best_ratio;
  Verdict verdict = best_ratio > predicted.upper + kExceedSlack ? Verdict::ExceedsBound
                                                                : (predicted.is_exact() ? Verdict::BelowBound
                                                                                        : Verdict::BracketProbe);
  return SearchReport{
      .best_ratio = best_ratio,
      .best_pair = MatrixPair(winner.x, winner.y),
      .predicted = std::move(predicted),
      .verdict = verdict,
      .epsilon = cfg.epsilon,
      .iterations_used = iterations,
      .best_start = best,
      .best_start_name = best < warm_count ? warm[static_cast<std::size_t>(best)].name() : "random",
      .warm_starts = warm_count,
      .total_starts = total,
  };
}

SearchReport verify_constant(const NormIndex& p, const NormIndex& q, const NormIndex& r, int d,
                             const OptimizerConfig& cfg) {
  SearchReport report = maximize_ratio(p, q, r, d, cfg);
  const BoundResult& bound = report.predicted;
  if (report.best_ratio > bound.upper + kExceedSlack) {
    report.verdict = Verdict::ExceedsBound;
  } else if (bound.is_exact()) {
    report.verdict = report.best_ratio >= *bound.value - cfg.epsilon ? Verdict::AttainedWithin
                                                                     : Verdict::BelowBound;
  } else {
    report.verdict = Verdict::BracketProbe;
  }
  return report;
}

}  // namespace commnorm
