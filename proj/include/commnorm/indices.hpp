#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace commnorm {

using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& x);

// Parses "3", "-2/5", "0.125" into an exact rational. Decimal strings are
// read digit by digit, never through a double.
Rational parse_rational(std::string_view text);

std::string format_rational(const Rational& x);

// A Schatten index p in [1, inf], stored by its reciprocal u = 1/p in [0, 1].
// p = inf is u = 0, so infinity needs no special case anywhere downstream.
class NormIndex {
 public:
  NormIndex() = default;  // p = 1

  static NormIndex from_reciprocal(Rational u);
  static NormIndex from_value(const Rational& p);
  static NormIndex infinity() { return from_reciprocal(Rational(0)); }
  // Every finite double is a dyadic rational, so this conversion is exact.
  static NormIndex from_double(double p);
  // Accepts "inf", "infinity", integers, fractions "4/3" and decimals "2.5".
  static NormIndex parse(std::string_view text);

  const Rational& reciprocal() const { return u_; }
  double reciprocal_value() const { return u_double_; }
  bool is_infinite() const { return u_ == 0; }

  // p as a double; +inf for u = 0.
  double value() const;
  // Exact p; throws DomainError for p = inf.
  Rational exact_value() const;

  // "inf", "2", "4/3".
  std::string to_string() const;

  bool operator==(const NormIndex& other) const { return u_ == other.u_; }
  // Ordered by p, i.e. reversed on u.
  std::strong_ordering operator<=>(const NormIndex& other) const;

 private:
  explicit NormIndex(Rational u);

  Rational u_{1};
  double u_double_ = 1.0;
};

// p' with 1/p + 1/p' = 1.
NormIndex conjugate(const NormIndex& a);

// Image coordinate p -> 1 - 1/p mapping [1, inf] onto [0, 1].
Rational scale_coord(const NormIndex& a);

// Index with reciprocal (1 - theta) / a + theta / b. theta must lie in [0, 1].
NormIndex interpolate_index(const NormIndex& a, const NormIndex& b,
                            const Rational& theta);

}  // namespace commnorm
