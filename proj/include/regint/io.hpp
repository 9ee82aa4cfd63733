#pragma once

#include "regint/bigint.hpp"

#include <cstdio>
#include <string>

namespace regint {

/// Exact decimal forms: integers plain, proper rationals as "p/q". These
/// round-trip bit-identically; rationals are never rendered as floats.
inline std::string value_string(const BigInt& v) { return v.str(); }

inline std::string value_string(const BigRat& v) {
  if (is_integer(v)) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

/// Floats carry 12 significant digits.
inline std::string value_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

/// Parses "p" or "p/q" back to an exact rational.
inline BigRat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return BigRat(BigInt(text));
  return BigRat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

}  // namespace regint
