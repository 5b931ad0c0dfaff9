#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace npa {

/// Arbitrary-precision rational, the scalar for every weight and probability.
///
/// Values produced by arithmetic are canonical (lowest terms, positive
/// denominator). Values read from text go through parse_rat, which
/// canonicalizes as well.
using Rat = mpq_class;

/// num/den in lowest terms. Prefer this to Rat(num, den), which does not
/// canonicalize.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input or a
/// zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rat& value);

/// Display-only decimal rendering rounded half away from zero.
std::string to_decimal(const Rat& value, unsigned digits);

inline bool in_unit_interval(const Rat& value) { return value >= 0 && value <= 1; }

}  // namespace npa
