#pragma once

#include <vector>

#include "tasep/rational.hpp"

namespace tasep {

/// Exact probability per state index (site k <-> bit k-1).
struct StationaryDistribution {
  int n = 0;
  std::vector<Rational> probability;

  const Rational& operator[](const Configuration& c) const {
    return probability[static_cast<std::size_t>(c.index())];
  }

  friend bool operator==(const StationaryDistribution&, const StationaryDistribution&) = default;
};

/// rho_k = sum of P(C) over configurations with site k filled.
std::vector<Rational> density_profile(const StationaryDistribution& dist);

/// 1/2 * sum |p - q| against floating estimates indexed like `exact`.
double total_variation(const StationaryDistribution& exact, const std::vector<double>& empirical);

}  // namespace tasep
