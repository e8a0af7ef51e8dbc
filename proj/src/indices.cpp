#include "commnorm/indices.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "commnorm/errors.hpp"

namespace commnorm {

using boost::multiprecision::cpp_int;

double to_double(const Rational& x) { return x.convert_to<double>(); }

namespace {

cpp_int parse_integer_digits(std::string_view digits, std::string_view text) {
  if (digits.empty()) throw InputError("malformed number '" + std::string(text) + "'");
  cpp_int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("malformed number '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_unsigned_decimal(std::string_view body, std::string_view text) {
  const auto dot = body.find('.');
  if (dot == std::string_view::npos) return Rational(parse_integer_digits(body, text));
  const std::string_view whole = body.substr(0, dot);
  const std::string_view frac = body.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw InputError("malformed number '" + std::string(text) + "'");
  cpp_int numerator = whole.empty() ? cpp_int(0) : parse_integer_digits(whole, text);
  cpp_int denominator = 1;
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("malformed number '" + std::string(text) + "'");
    }
    numerator = numerator * 10 + (c - '0');
    denominator *= 10;
  }
  return Rational(numerator, denominator);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    value = parse_unsigned_decimal(s, text);
  } else {
    const Rational num = parse_unsigned_decimal(s.substr(0, slash), text);
    const Rational den = parse_unsigned_decimal(s.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = num / den;
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

NormIndex::NormIndex(Rational u) : u_(std::move(u)), u_double_(to_double(u_)) {}

NormIndex NormIndex::from_reciprocal(Rational u) {
  if (u < 0 || u > 1) {
    throw DomainError("norm index reciprocal " + format_rational(u) + " outside [0,1]");
  }
  return NormIndex(std::move(u));
}

NormIndex NormIndex::from_value(const Rational& p) {
  if (p < 1) throw DomainError("norm index " + format_rational(p) + " below 1");
  return NormIndex(Rational(1) / p);
}

NormIndex NormIndex::from_double(double p) {
  if (std::isnan(p)) throw InputError("norm index is NaN");
  if (std::isinf(p)) {
    if (p < 0) throw DomainError("norm index -inf");
    return infinity();
  }
  if (p < 1.0) throw DomainError("norm index below 1");
  int exponent = 0;
  const double mantissa = std::frexp(p, &exponent);
  const auto digits = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational exact(digits);
  const int shift = exponent - 53;
  if (shift >= 0) {
    exact *= Rational(cpp_int(1) << shift);
  } else {
    exact /= Rational(cpp_int(1) << -shift);
  }
  return from_value(exact);
}

NormIndex NormIndex::parse(std::string_view text) {
  std::string lowered;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (lowered == "inf" || lowered == "infinity" || lowered == "+inf") return infinity();
  return from_value(parse_rational(lowered));
}

double NormIndex::value() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return to_double(Rational(1) / u_);
}

Rational NormIndex::exact_value() const {
  if (is_infinite()) throw DomainError("norm index is infinite");
  return Rational(1) / u_;
}

std::string NormIndex::to_string() const {
  if (is_infinite()) return "inf";
  return format_rational(Rational(1) / u_);
}

std::strong_ordering NormIndex::operator<=>(const NormIndex& other) const {
  if (u_ == other.u_) return std::strong_ordering::equal;
  return u_ > other.u_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

NormIndex conjugate(const NormIndex& a) {
  return NormIndex::from_reciprocal(Rational(1) - a.reciprocal());
}

Rational scale_coord(const NormIndex& a) { return Rational(1) - a.reciprocal(); }

NormIndex interpolate_index(const NormIndex& a, const NormIndex& b, const Rational& theta) {
  if (theta < 0 || theta > 1) {
    throw DomainError("interpolation parameter " + format_rational(theta) + " outside [0,1]");
  }
  return NormIndex::from_reciprocal((Rational(1) - theta) * a.reciprocal() + theta * b.reciprocal());
}

}  // namespace commnorm
