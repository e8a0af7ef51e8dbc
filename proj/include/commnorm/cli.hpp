#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commnorm/constants.hpp"
#include "commnorm/optimizer.hpp"

namespace commnorm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // domain or input error
inline constexpr int kUsage = 2;    // unknown subcommand or flag

int run(int argc, char** argv);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 17 significant digits, '.' decimal separator; "inf"/"nan" as printed by %g.
std::string format_number(double value);

nlohmann::json bound_to_json(const BoundResult& result, const IndexTriplet& t,
                             std::optional<int> d);
nlohmann::json report_to_json(const SearchReport& report, const IndexTriplet& t, int d);

// One scan axis in image coordinates s = 1 - 1/p.
struct AxisSpec {
  enum class Kind { Range, Fixed, Tied };
  Kind kind = Kind::Fixed;
  Rational lo{0};
  Rational hi{1};
  int steps = 2;
  NormIndex fixed;
  char tied_to = 'p';

  // "lo:hi:steps" (image coordinates), "p"/"q"/"r" to follow another axis,
  // or a plain index such as "2", "4/3", "inf".
  static AxisSpec parse(std::string_view text);
};

struct ScanSpec {
  AxisSpec p;
  AxisSpec q;
  AxisSpec r;
  std::optional<int> dim;

  // Throws InputError on ranges outside [0,1], steps < 2 or broken ties.
  void validate() const;
  std::size_t row_count() const;
};

// Writes the CSV header and one row per grid point, p outermost, r innermost.
void scan(const ScanSpec& spec, std::ostream& out);

}  // namespace commnorm::cli
