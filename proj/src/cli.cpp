#include "commnorm/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commnorm/bounds.hpp"
#include "commnorm/errors.hpp"
#include "commnorm/geometry.hpp"
#include "commnorm/matrix_json.hpp"
#include "commnorm/maximality.hpp"

namespace commnorm::cli {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

IndexTriplet parse_triplet(const std::string& p, const std::string& q, const std::string& r) {
  return {NormIndex::parse(p), NormIndex::parse(q), NormIndex::parse(r)};
}

json pair_to_json(const MatrixPair& pair) {
  return {{"X", matrix_to_json(pair.x())}, {"Y", matrix_to_json(pair.y())}};
}

Rational image_point(const AxisSpec& axis, int i) {
  if (axis.steps == 1) return axis.lo;
  return axis.lo + (axis.hi - axis.lo) * Rational(i, axis.steps - 1);
}

int axis_steps(const AxisSpec& axis) { return axis.kind == AxisSpec::Kind::Range ? axis.steps : 1; }

std::string csv_optional(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

void write_csv_table(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_number(row[k]);
    out << '\n';
  }
}

// Writes to `path` when given, stdout otherwise.
template <typename Writer>
void emit(const std::string& path, std::ostream& out, Writer&& writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  writer(file);
  file.flush();
  if (!file) throw InputError("write failed for " + path);
}

std::vector<Rational> linear_samples(const Rational& lo, const Rational& hi, int steps) {
  if (steps < 2) throw InputError("--steps must be at least 2");
  if (hi < lo) throw InputError("--pmax must not be below --pmin");
  std::vector<Rational> out;
  for (int i = 0; i < steps; ++i) out.push_back(lo + (hi - lo) * Rational(i, steps - 1));
  return out;
}

Rational finite_index(const std::string& text, const char* flag) {
  const NormIndex index = NormIndex::parse(text);
  if (index.is_infinite()) throw InputError(std::string(flag) + " must be finite");
  return index.exact_value();
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

json bound_to_json(const BoundResult& result, const IndexTriplet& t, std::optional<int> d) {
  json j;
  j["p"] = t.p.to_string();
  j["q"] = t.q.to_string();
  j["r"] = t.r.to_string();
  j["dimension"] = d ? json(*d) : json(nullptr);
  j["region"] = std::string(to_string(result.region));
  j["status"] = std::string(to_string(result.status));
  j["value"] = optional_number(result.value);
  j["lower"] = result.lower;
  j["upper"] = result.upper;
  j["dimension_dependent"] = result.dimension_dependent;
  j["witness"] = result.witness ? json(result.witness->name()) : json(nullptr);
  j["log2_value"] = result.log2_value ? json(format_rational(*result.log2_value)) : json(nullptr);
  j["note"] = result.note;
  return j;
}

json report_to_json(const SearchReport& report, const IndexTriplet& t, int d) {
  json j;
  j["best_ratio"] = report.best_ratio;
  j["verdict"] = std::string(to_string(report.verdict));
  j["epsilon"] = report.epsilon;
  j["iterations_used"] = report.iterations_used;
  j["best_start"] = report.best_start;
  j["best_start_name"] = report.best_start_name;
  j["warm_starts"] = report.warm_starts;
  j["total_starts"] = report.total_starts;
  j["predicted"] = bound_to_json(report.predicted, t, d);
  j["best_pair"] = pair_to_json(report.best_pair);
  return j;
}

AxisSpec AxisSpec::parse(std::string_view text) {
  AxisSpec axis;
  if (text == "p" || text == "q" || text == "r") {
    axis.kind = Kind::Tied;
    axis.tied_to = text.front();
    return axis;
  }
  const auto first = text.find(':');
  if (first == std::string_view::npos) {
    axis.kind = Kind::Fixed;
    axis.fixed = NormIndex::parse(text);
    return axis;
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) throw InputError("axis range must be lo:hi:steps");
  axis.kind = Kind::Range;
  axis.lo = parse_rational(text.substr(0, first));
  axis.hi = parse_rational(text.substr(first + 1, second - first - 1));
  const Rational steps = parse_rational(text.substr(second + 1));
  if (denominator(steps) != 1 || steps < 1 || steps > 100000) {
    throw InputError("axis steps must be a positive integer");
  }
  axis.steps = static_cast<int>(numerator(steps));
  return axis;
}

void ScanSpec::validate() const {
  const AxisSpec* axes[] = {&p, &q, &r};
  const char names[] = {'p', 'q', 'r'};
  for (int k = 0; k < 3; ++k) {
    const AxisSpec& axis = *axes[k];
    if (axis.kind == AxisSpec::Kind::Range) {
      if (axis.lo < 0 || axis.hi > 1 || axis.lo > 1 || axis.hi < 0) {
        throw InputError(std::string("axis ") + names[k] + " range outside [0,1]");
      }
      if (axis.steps < 2) throw InputError(std::string("axis ") + names[k] + " needs steps >= 2");
    }
    if (axis.kind == AxisSpec::Kind::Tied) {
      const int target = axis.tied_to - 'p';
      if (target == k || axes[target]->kind == AxisSpec::Kind::Tied) {
        throw InputError(std::string("axis ") + names[k] + " must follow an untied axis");
      }
    }
  }
  if (dim && *dim < 2) throw InputError("--dim must be at least 2");
}

std::size_t ScanSpec::row_count() const {
  return static_cast<std::size_t>(axis_steps(p)) * axis_steps(q) * axis_steps(r);
}

void scan(const ScanSpec& spec, std::ostream& out) {
  spec.validate();
  out << "s_p,s_q,s_r,p,q,r,region,status,value,lower,upper,"
         "p11_lower_trivial,p11_lower,p11_upper_refined,p11_upper_interp\n";
  const AxisSpec* axes[] = {&spec.p, &spec.q, &spec.r};
  const NormIndex one = NormIndex::from_value(Rational(1));
  for (int i = 0; i < axis_steps(spec.p); ++i) {
    for (int j = 0; j < axis_steps(spec.q); ++j) {
      for (int k = 0; k < axis_steps(spec.r); ++k) {
        const int counters[] = {i, j, k};
        NormIndex index[3];
        for (int a = 0; a < 3; ++a) {
          if (axes[a]->kind == AxisSpec::Kind::Range) {
            index[a] = NormIndex::from_reciprocal(Rational(1) - image_point(*axes[a], counters[a]));
          } else if (axes[a]->kind == AxisSpec::Kind::Fixed) {
            index[a] = axes[a]->fixed;
          }
        }
        for (int a = 0; a < 3; ++a) {
          if (axes[a]->kind == AxisSpec::Kind::Tied) index[a] = index[axes[a]->tied_to - 'p'];
        }
        const NormIndex& p = index[0];
        const NormIndex& q = index[1];
        const NormIndex& r = index[2];
        for (const NormIndex& x : index) out << format_number(to_double(scale_coord(x))) << ',';
        for (const NormIndex& x : index) out << format_number(x.value()) << ',';
        out << to_string(classify(p, q, r)) << ',';
        try {
          const BoundResult result = constant(p, q, r, spec.dim);
          out << to_string(result.status) << ',' << csv_optional(result.value) << ','
              << format_number(result.lower) << ',' << format_number(result.upper);
        } catch (const DimensionRequired&) {
          out << "DimensionRequired,,,";
        }
        if (q == one && r == one && p.reciprocal() <= Rational(1, 2)) {
          out << ',' << format_number(std::exp2(p.reciprocal_value())) << ','
              << format_number(lower_p11(p)) << ',' << format_number(upper_p11_refined(p)) << ','
              << format_number(upper_p11(p));
        } else {
          out << ",,,,";
        }
        out << '\n';
      }
    }
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp constants for ||XY - YX||_p <= C ||X||_q ||Y||_r", "commnorm"};
  app.require_subcommand(1);

  std::string sp, sq, sr;
  std::optional<int> dim;

  auto* constant_cmd = app.add_subcommand("constant", "Value or bracket of C_{p,q,r}");
  constant_cmd->add_option("p", sp)->required();
  constant_cmd->add_option("q", sq)->required();
  constant_cmd->add_option("r", sr)->required();
  constant_cmd->add_option("--dim", dim, "Matrix size d");

  std::string out_path;
  auto* witness_cmd = app.add_subcommand("witness", "Best known matrix pair");
  witness_cmd->add_option("p", sp)->required();
  witness_cmd->add_option("q", sq)->required();
  witness_cmd->add_option("r", sr)->required();
  witness_cmd->add_option("--dim", dim, "Matrix size d")->required();
  witness_cmd->add_option("--out", out_path, "Write the pair as JSON");

  OptimizerConfig cfg;
  bool as_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Certify C_{p,q,r} by numerical search");
  verify_cmd->add_option("p", sp)->required();
  verify_cmd->add_option("q", sq)->required();
  verify_cmd->add_option("r", sr)->required();
  verify_cmd->add_option("--dim", dim, "Matrix size d")->required();
  verify_cmd->add_option("--restarts", cfg.restarts, "Random starts")->capture_default_str();
  verify_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--max-iters", cfg.max_iters, "Iterations per start")->capture_default_str();
  verify_cmd->add_option("--tol", cfg.tol, "Stall tolerance per window")->capture_default_str();
  verify_cmd->add_option("--epsilon", cfg.epsilon, "Attainment tolerance")->capture_default_str();
  verify_cmd->add_option("--smoothing-cap", cfg.smoothing_cap, "Index cap during ascent")->capture_default_str();
  verify_cmd->add_option("--warmup-cap", cfg.warmup_cap, "First cap of the continuation")->capture_default_str();
  verify_cmd->add_option("--polish-cap", cfg.polish_cap, "Final cap of the polish stages")->capture_default_str();
  verify_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all)")->capture_default_str();
  verify_cmd->add_flag("--json", as_json, "Print the full report as JSON");

  // p11 bounds start at p = 2, the pinfinf bracket at p = 1.
  std::string p11_pmin = "2", pii_pmin = "1", pmax = "32", csv_path;
  int steps = 31;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bound curves as CSV");
  bounds_cmd->require_subcommand(1);
  auto* p11_cmd = bounds_cmd->add_subcommand("p11", "Bounds on C_{p,1,1}");
  auto* pii_cmd = bounds_cmd->add_subcommand("pinfinf", "Bounds on C_{p,inf,inf} for odd d");
  p11_cmd->add_option("--pmin", p11_pmin)->capture_default_str();
  pii_cmd->add_option("--pmin", pii_pmin)->capture_default_str();
  for (auto* cmd : {p11_cmd, pii_cmd}) {
    cmd->add_option("--pmax", pmax)->capture_default_str();
    cmd->add_option("--steps", steps)->capture_default_str();
    cmd->add_option("--csv", csv_path, "Output file (stdout if absent)");
  }
  pii_cmd->add_option("--dim", dim, "Odd matrix size d")->required();

  int polygon_n = 0;
  bool with_oracle = false;
  PolygonSearch polygon_search;
  auto* polygon_cmd = app.add_subcommand("polygon", "Maximal polygon circumference L(n)");
  polygon_cmd->add_option("n", polygon_n)->required();
  polygon_cmd->add_flag("--oracle", with_oracle, "Also run the brute-force oracle");
  polygon_cmd->add_option("--seed", polygon_search.seed)->capture_default_str();
  polygon_cmd->add_option("--restarts", polygon_search.restarts)->capture_default_str();

  std::string pair_path;
  double tol = kDefaultMaximalityTolerance;
  auto* max_cmd = app.add_subcommand("maximality", "Structural checks for a matrix pair");
  max_cmd->add_option("--pair", pair_path, "Pair JSON with X and Y")->required();
  max_cmd->add_option("--p", sp)->required();
  max_cmd->add_option("--q", sq)->required();
  max_cmd->add_option("--r", sr)->required();
  max_cmd->add_option("--tol", tol)->capture_default_str();

  std::string axis_p, axis_q, axis_r;
  auto* scan_cmd = app.add_subcommand("scan", "Grid of constants as CSV");
  scan_cmd->add_option("--p", axis_p, "lo:hi:steps in image coordinates, an index, or q/r")->required();
  scan_cmd->add_option("--q", axis_q)->required();
  scan_cmd->add_option("--r", axis_r)->required();
  scan_cmd->add_option("--dim", dim);
  scan_cmd->add_option("--csv", csv_path, "Output file (stdout if absent)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (constant_cmd->parsed()) {
      const IndexTriplet t = parse_triplet(sp, sq, sr);
      out << bound_to_json(constant(t.p, t.q, t.r, dim), t, dim).dump(2) << '\n';
    } else if (witness_cmd->parsed()) {
      const IndexTriplet t = parse_triplet(sp, sq, sr);
      const auto [recipe, measured] = best_witness(t.p, t.q, t.r, *dim);
      const MatrixPair pair = build(recipe);
      json j = pair_to_json(pair);
      j["recipe"] = recipe.name();
      j["dimension"] = *dim;
      j["predicted_ratio"] = predicted_ratio(recipe, t.p, t.q, t.r);
      j["ratio"] = measured;
      if (!out_path.empty()) write_json_file(out_path, j);
      out << j.dump(2) << '\n';
    } else if (verify_cmd->parsed()) {
      const IndexTriplet t = parse_triplet(sp, sq, sr);
      const SearchReport report = verify_constant(t.p, t.q, t.r, *dim, cfg);
      if (as_json) {
        out << report_to_json(report, t, *dim).dump(2) << '\n';
      } else {
        out << "triplet " << t.to_string() << " d=" << *dim << '\n'
            << "predicted " << to_string(report.predicted.status) << " ["
            << format_number(report.predicted.lower) << ", " << format_number(report.predicted.upper)
            << "]\n"
            << "best_ratio " << format_number(report.best_ratio) << " (start " << report.best_start
            << ", " << report.best_start_name << ")\n"
            << "verdict " << to_string(report.verdict) << '\n';
      }
      if (report.verdict == Verdict::ExceedsBound) {
        err << "error: search exceeded the proven upper bound\n";
        return kFailure;
      }
    } else if (p11_cmd->parsed()) {
      std::vector<std::vector<double>> rows;
      for (const Rational& pv : linear_samples(finite_index(p11_pmin, "--pmin"), finite_index(pmax, "--pmax"), steps)) {
        const NormIndex p = NormIndex::from_value(pv);
        rows.push_back({to_double(pv), lower_p11(p), upper_p11_refined(p), upper_p11(p)});
      }
      emit(csv_path, out, [&](std::ostream& o) {
        write_csv_table(o, {"p", "lower", "upper_refined", "upper_interp"}, rows);
      });
    } else if (pii_cmd->parsed()) {
      std::vector<std::vector<double>> rows;
      for (const Rational& pv : linear_samples(finite_index(pii_pmin, "--pmin"), finite_index(pmax, "--pmax"), steps)) {
        const NormIndex p = NormIndex::from_value(pv);
        const Bracket b = bounds_pinfinf(p, *dim);
        rows.push_back({to_double(pv), lower_pinfinf_star(p, *dim), lower_pinfinf_padded(p, *dim), b.lower,
                        b.upper});
      }
      emit(csv_path, out, [&](std::ostream& o) {
        write_csv_table(o, {"p", "lower_star", "lower_padded", "lower", "upper"}, rows);
      });
    } else if (polygon_cmd->parsed()) {
      const double formula = max_polygon_length(polygon_n);
      if (with_oracle) {
        const double oracle = brute_force_polygon(polygon_n, polygon_search);
        json j{{"n", polygon_n}, {"formula", formula}, {"oracle", oracle}, {"difference", formula - oracle}};
        out << j.dump(2) << '\n';
      } else {
        out << format_number(formula) << '\n';
      }
    } else if (max_cmd->parsed()) {
      const IndexTriplet t = parse_triplet(sp, sq, sr);
      const json file = read_json_file(pair_path);
      if (!file.contains("X") || !file.contains("Y")) throw InputError("pair JSON needs X and Y");
      const MatrixPair pair(matrix_from_json(file["X"]), matrix_from_json(file["Y"]));
      const CoreCheck core = evaluate_core(pair, tol);
      json j;
      j["tolerance"] = tol;
      j["core"] = {{"passed", core.passed},
                   {"support_dim", core.compression.support_dim},
                   {"compression_residual", core.compression.residual},
                   {"trace_x", core.trace_x},
                   {"trace_y", core.trace_y},
                   {"trace_yx", core.trace_yx},
                   {"trace_limit", core.trace_limit}};
      json conditions = json::object();
      using C = MaximalityCondition;
      for (C c : {C::Rank1X, C::Rank1Y, C::Rank1Z, C::UnitaryX, C::UnitaryY, C::UnitaryZ, C::None2x2Extra}) {
        const ConditionCheck check = evaluate_condition(pair, c, tol);
        conditions[std::string(to_string(c))] = {{"holds", check.holds}, {"residual", check.residual}};
      }
      j["conditions"] = conditions;
      const auto required = required_conditions(t.p, t.q, t.r);
      if (required) {
        json names = json::array();
        bool satisfied = core.passed;
        for (C c : *required) {
          names.push_back(std::string(to_string(c)));
          satisfied = satisfied && check_condition(pair, c, tol);
        }
        j["required"] = names;
        j["required_satisfied"] = satisfied;
      } else {
        j["required"] = nullptr;
        j["required_satisfied"] = nullptr;
      }
      const int d = static_cast<int>(pair.dim());
      j["ratio"] = ratio(pair, t.p, t.q, t.r);
      try {
        j["constant"] = bound_to_json(constant(t.p, t.q, t.r, d), t, d);
      } catch (const DomainError& e) {
        j["constant"] = nullptr;
      }
      out << j.dump(2) << '\n';
    } else if (scan_cmd->parsed()) {
      ScanSpec spec{AxisSpec::parse(axis_p), AxisSpec::parse(axis_q), AxisSpec::parse(axis_r), dim};
      spec.validate();
      emit(csv_path, out, [&](std::ostream& o) { scan(spec, o); });
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace commnorm::cli
