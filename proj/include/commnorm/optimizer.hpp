#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "commnorm/constants.hpp"
#include "commnorm/witnesses.hpp"

namespace commnorm {

enum class GradientMode { Analytic, FiniteDifference };

struct OptimizerConfig {
  std::uint64_t seed = 0;
  int restarts = 200;       // random starts, in addition to the witness warm starts
  int max_iters = 2000;     // per start
  double step_init = 0.1;   // relative to the current parameter norm
  double tol = 1e-10;       // stop once the objective gained less than this over the window
  int stall_window = 50;
  double epsilon = 1e-6;    // attainment tolerance used by verify_constant
  double smoothing_cap = 64.0;  // indices are clamped to [cap/(cap-1), cap] during ascent
  // Continuation: short stages at warmup_cap, 4x warmup_cap, ... below
  // smoothing_cap, then the main stage, then 4x steps up to polish_cap. The
  // smooth early stages find the basin, the late ones sharpen the kinks at 1
  // and inf that stall a plain ascent.
  double warmup_cap = 4.0;
  double polish_cap = 4096.0;
  GradientMode gradient = GradientMode::Analytic;
  int threads = 0;          // 0 = hardware concurrency

  void validate() const;
};

enum class Verdict { AttainedWithin, BelowBound, ExceedsBound, BracketProbe };

std::string_view to_string(Verdict verdict);

struct SearchReport {
  double best_ratio = 0.0;
  MatrixPair best_pair;
  BoundResult predicted;
  Verdict verdict = Verdict::BelowBound;
  double epsilon = 0.0;
  long iterations_used = 0;
  int best_start = 0;          // index into the start list (warm starts first)
  std::string best_start_name;  // recipe name or "random"
  int warm_starts = 0;
  int total_starts = 0;
};

// Ascends log||[X,Y]||_p - log||X||_q - log||Y||_r over complex d x d pairs.
// Indices are smoothed by smoothing_cap during the ascent (then polished up to
// polish_cap) and every accepted iterate is scored at the true indices.
// Deterministic for a fixed config, whatever the thread count.
SearchReport maximize_ratio(const NormIndex& p, const NormIndex& q, const NormIndex& r, int d,
                            const OptimizerConfig& cfg = {});

// maximize_ratio followed by a verdict against constant(p, q, r, d):
// AttainedWithin when the value is exact and reached within cfg.epsilon,
// BracketProbe inside a bracket, BelowBound otherwise. ExceedsBound whenever
// the search beats the proven upper bound by more than 1e-6, which can only
// mean a bug.
SearchReport verify_constant(const NormIndex& p, const NormIndex& q, const NormIndex& r, int d,
                             const OptimizerConfig& cfg = {});

}  // namespace commnorm
