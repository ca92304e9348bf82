#include "tasep/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace tasep {

std::vector<Rational> density_profile(const StationaryDistribution& dist) {
  std::vector<Rational> rho(static_cast<std::size_t>(dist.n), Rational{0});
  for (std::size_t s = 0; s < dist.probability.size(); ++s) {
    for (int k = 0; k < dist.n; ++k) {
      if ((s >> k) & 1U) rho[static_cast<std::size_t>(k)] += dist.probability[s];
    }
  }
  return rho;
}

double total_variation(const StationaryDistribution& exact, const std::vector<double>& empirical) {
  if (empirical.size() != exact.probability.size()) {
    throw std::invalid_argument("distribution sizes differ");
  }
  double sum = 0.0;
  for (std::size_t s = 0; s < empirical.size(); ++s) {
    sum += std::abs(exact.probability[s].get_d() - empirical[s]);
  }
  return 0.5 * sum;
}

}  // namespace tasep
