#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tasep/distribution.hpp"
#include "tasep/rational.hpp"

namespace tasep {

/// Exact TASEP rate matrix on the 2^n configurations. Rows are source
/// states; only off-diagonal rates are stored, the diagonal is implied.
class Generator {
 public:
  using Entry = std::pair<std::uint64_t, Rational>;

  Generator(int n, RateParams rates);

  int sites() const { return n_; }
  std::size_t state_count() const { return rows_.size(); }
  const RateParams& rates() const { return rates_; }

  /// Off-diagonal (target, rate) pairs of a row, in bond order.
  const std::vector<Entry>& row(std::uint64_t state) const { return rows_[static_cast<std::size_t>(state)]; }

  /// Minus the row's off-diagonal sum.
  Rational diagonal(std::uint64_t state) const;

  /// Q[from][to], including the diagonal.
  Rational entry(std::uint64_t from, std::uint64_t to) const;

  std::size_t off_diagonal_count() const;

 private:
  int n_;
  RateParams rates_;
  std::vector<std::vector<Entry>> rows_;
};

/// Throws std::invalid_argument for n < 1 or rates outside (0, 1].
Generator build_generator(int n, const RateParams& rates);

/// Unique normalized null vector of the transposed generator, by exact
/// sparse elimination. Throws std::runtime_error if the kernel is not
/// one-dimensional or the exact residual is nonzero.
StationaryDistribution solve_stationary(const Generator& g);

struct SimulationRun {
  int n = 0;
  RateParams rates;
  std::uint64_t seed = 0;
  std::uint64_t events = 0;
  std::uint64_t burn_in = 0;
  /// Time spent in each state after burn-in.
  std::vector<double> occupation;
  double observed_time = 0.0;

  std::vector<double> empirical() const;
};

/// Continuous-time simulation from the empty lattice. Dwell times are
/// exponential in the total active rate and the next bond is chosen in
/// proportion to its rate; occupation is recorded for events with index
/// >= burn_in. Deterministic for a given seed on a given standard library.
/// Throws std::invalid_argument unless events > burn_in and events > 0.
SimulationRun simulate(int n, const RateParams& rates, std::uint64_t events, std::uint64_t burn_in,
                       std::uint64_t seed);

}  // namespace tasep
