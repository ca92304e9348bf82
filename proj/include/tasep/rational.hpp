#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tasep/configuration.hpp"

namespace tasep {

using Rational = mpq_class;

/// Parses "p/q" (or a bare integer "p"); the result is canonicalized.
/// Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// Canonical "p/q"; integers keep the "/1" suffix so every rate
/// round-trips through parse_rational.
std::string to_string(const Rational& q);

/// Decimal rendering with `digits` places after the point (display only).
std::string to_decimal(const Rational& q, int digits);

/// Entry/exit rates, both in (0, 1].
struct RateParams {
  Rational alpha{1};
  Rational beta{1};

  /// Throws std::invalid_argument unless 0 < alpha, beta <= 1.
  void validate() const;

  const Rational& value(Rate r) const;
};

}  // namespace tasep
