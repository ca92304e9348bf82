#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "tasep/markov.hpp"
#include "tasep/weights.hpp"

using namespace tasep;

namespace {

RateParams rates(const char* a, const char* b) { return {parse_rational(a), parse_rational(b)}; }

// Dense Gauss-Jordan on the balance equations with the last one replaced by
// normalization. Slow and simple; shares nothing with the sparse solver.
std::vector<Rational> dense_stationary(const Generator& g) {
  const std::size_t size = g.state_count();
  std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size + 1, Rational{0}));
  for (std::size_t t = 0; t + 1 < size; ++t) {
    for (std::size_t s = 0; s < size; ++s) m[t][s] = g.entry(s, t);
  }
  for (std::size_t s = 0; s < size; ++s) m[size - 1][s] = 1;
  m[size - 1][size] = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t p = col;
    while (m[p][col] == 0) ++p;
    std::swap(m[p], m[col]);
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= size; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> x(size);
  for (std::size_t i = 0; i < size; ++i) x[i] = m[i][size] / m[i][i];
  return x;
}

}  // namespace

TEST_CASE("generator structure") {
  const Generator g1 = build_generator(1, rates("1/2", "1/3"));
  CHECK(g1.state_count() == 2);
  CHECK(g1.entry(0, 1) == Rational(1, 2));
  CHECK(g1.entry(1, 0) == Rational(1, 3));

  const Generator g2 = build_generator(2, RateParams{});
  CHECK(g2.off_diagonal_count() == 5);
  const auto c01 = Configuration::parse("01").index();
  const RateParams ab = rates("1/2", "1/3");
  CHECK(build_generator(2, ab).diagonal(c01) == -(ab.alpha + ab.beta));

  for (int n = 1; n <= 6; ++n) {
    const Generator g = build_generator(n, ab);
    std::size_t bonds = 0;
    for (std::uint64_t s = 0; s < g.state_count(); ++s) {
      Rational row_sum = g.diagonal(s);
      for (const auto& [t, rate] : g.row(s)) {
        CHECK(rate > 0);
        row_sum += rate;
      }
      CHECK(row_sum == 0);
      bonds += active_bonds(Configuration::from_index(n, s)).size();
    }
    CHECK(g.off_diagonal_count() == bonds);
  }

  CHECK_THROWS_AS(build_generator(2, rates("0/1", "1/2")), std::invalid_argument);
  CHECK_THROWS_AS(build_generator(2, rates("1/2", "2/1")), std::invalid_argument);
  CHECK_THROWS_AS(build_generator(0, RateParams{}), std::invalid_argument);
}

TEST_CASE("exact stationary solve") {
  const auto p2 = solve_stationary(build_generator(2, RateParams{}));
  CHECK(p2[Configuration::parse("00")] == Rational(1, 5));
  CHECK(p2[Configuration::parse("10")] == Rational(2, 5));
  CHECK(p2[Configuration::parse("11")] == Rational(1, 5));
  CHECK(p2[Configuration::parse("01")] == Rational(1, 5));

  const RateParams ab = rates("1/2", "1/3");
  const auto p1 = solve_stationary(build_generator(1, ab));
  CHECK(p1[Configuration::parse("1")] == ab.alpha / (ab.alpha + ab.beta));

  CHECK(solve_stationary(build_generator(2, ab)) == stationary_weights(2).distribution(ab));
}

TEST_CASE("sparse solver agrees with a dense reference") {
  for (int n = 1; n <= 5; ++n) {
    for (const RateParams& r : {RateParams{}, rates("3/4", "1/10"), rates("1/3", "1/2")}) {
      const Generator g = build_generator(n, r);
      CHECK(solve_stationary(g).probability == dense_stationary(g));
    }
  }
}

TEST_CASE("density profile") {
  const auto rho = density_profile(solve_stationary(build_generator(2, RateParams{})));
  CHECK(rho == std::vector<Rational>{Rational(3, 5), Rational(2, 5)});

  const RateParams ab = rates("1/3", "3/4");
  CHECK(density_profile(solve_stationary(build_generator(1, ab))) ==
        std::vector<Rational>{ab.alpha / (ab.alpha + ab.beta)});

  StationaryDistribution uniform{3, std::vector<Rational>(8, Rational(1, 8))};
  for (const Rational& q : density_profile(uniform)) CHECK(q == Rational(1, 2));
}

TEST_CASE("simulation") {
  const auto exact = solve_stationary(build_generator(3, RateParams{}));
  const SimulationRun run = simulate(3, RateParams{}, 1'000'000, 100'000, 7);
  CHECK(total_variation(exact, run.empirical()) < 0.02);

  const SimulationRun again = simulate(3, RateParams{}, 1'000'000, 100'000, 7);
  CHECK(again.occupation == run.occupation);

  const SimulationRun two_state = simulate(1, RateParams{}, 200'000, 1'000, 3);
  CHECK(two_state.empirical()[1] == doctest::Approx(0.5).epsilon(0.02));

  for (double x : run.occupation) CHECK(x >= 0.0);
  CHECK_THROWS_AS(simulate(3, RateParams{}, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(simulate(3, RateParams{}, 10, 10, 1), std::invalid_argument);
}
