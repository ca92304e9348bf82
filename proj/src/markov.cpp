#include "tasep/markov.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace tasep {

Generator::Generator(int n, RateParams rates) : n_(n), rates_(std::move(rates)) {
  if (n < 1 || n > 20) throw std::invalid_argument("generator needs 1 <= n <= 20");
  rates_.validate();
  rows_.resize(std::size_t{1} << n);
  for (const Configuration& c : all_configurations(n)) {
    auto& row = rows_[static_cast<std::size_t>(c.index())];
    for (const Bond& b : active_bonds(c)) row.emplace_back(apply(c, b).index(), rates_.value(b.rate()));
  }
}

Rational Generator::diagonal(std::uint64_t state) const {
  Rational sum{0};
  for (const auto& [to, rate] : row(state)) sum += rate;
  return -sum;
}

Rational Generator::entry(std::uint64_t from, std::uint64_t to) const {
  if (from == to) return diagonal(from);
  for (const auto& [target, rate] : row(from)) {
    if (target == to) return rate;
  }
  return Rational{0};
}

std::size_t Generator::off_diagonal_count() const {
  std::size_t count = 0;
  for (const auto& r : rows_) count += r.size();
  return count;
}

Generator build_generator(int n, const RateParams& rates) { return {n, rates}; }

namespace {

using SparseRow = std::map<std::uint32_t, Rational>;

// Gaussian elimination on a sparse square system, choosing at each step the
// nonzero with the smallest Markowitz cost (row nnz - 1) * (col nnz - 1).
// Returns the pivots (row, column) in elimination order; `rows` is left in
// the reduced form needed for back-substitution.
std::vector<std::pair<std::uint32_t, std::uint32_t>> eliminate(std::vector<SparseRow>& rows) {
  const auto size = static_cast<std::uint32_t>(rows.size());
  std::vector<std::set<std::uint32_t>> cols(size);
  for (std::uint32_t r = 0; r < size; ++r) {
    for (const auto& [c, v] : rows[r]) cols[c].insert(r);
  }
  std::vector<bool> row_done(size, false);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots;

  for (;;) {
    std::size_t best_cost = SIZE_MAX;
    std::uint32_t pr = 0;
    std::uint32_t pc = 0;
    for (std::uint32_t r = 0; r < size; ++r) {
      if (row_done[r]) continue;
      const std::size_t row_len = rows[r].size();
      for (const auto& [c, v] : rows[r]) {
        const std::size_t cost = (row_len - 1) * (cols[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pr = r;
          pc = c;
        }
      }
    }
    if (best_cost == SIZE_MAX) break;

    row_done[pr] = true;
    pivots.emplace_back(pr, pc);
    const SparseRow& pivot_row = rows[pr];
    const Rational pivot = pivot_row.at(pc);
    std::vector<std::uint32_t> targets;
    for (std::uint32_t r : cols[pc]) {
      if (!row_done[r]) targets.push_back(r);
    }
    for (std::uint32_t r : targets) {
      const Rational factor = rows[r].at(pc) / pivot;
      for (const auto& [c, v] : pivot_row) {
        Rational& x = rows[r][c];
        x -= factor * v;
        if (x == 0) {
          rows[r].erase(c);
          cols[c].erase(r);
        } else {
          cols[c].insert(r);
        }
      }
    }
  }
  return pivots;
}

}  // namespace

StationaryDistribution solve_stationary(const Generator& g) {
  const auto size = static_cast<std::uint32_t>(g.state_count());
  // Row t of the transposed generator holds the balance equation of state t.
  std::vector<SparseRow> rows(size);
  for (std::uint32_t s = 0; s < size; ++s) {
    for (const auto& [t, rate] : g.row(s)) {
      rows[static_cast<std::size_t>(t)][s] += rate;
      rows[s][s] -= rate;
    }
  }

  const auto pivots = eliminate(rows);
  if (pivots.size() + 1 != size) {
    throw std::runtime_error("generator kernel has dimension " + std::to_string(size - pivots.size()) +
                             ", expected 1");
  }

  std::vector<bool> is_pivot_col(size, false);
  for (const auto& [r, c] : pivots) is_pivot_col[c] = true;
  std::uint32_t free_col = 0;
  while (is_pivot_col[free_col]) ++free_col;

  std::vector<Rational> x(size, Rational{0});
  x[free_col] = 1;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto [r, c] = *it;
    Rational acc{0};
    for (const auto& [j, v] : rows[r]) {
      if (j != c) acc += v * x[j];
    }
    x[c] = -acc / rows[r].at(c);
  }

  Rational total{0};
  for (const Rational& v : x) total += v;
  StationaryDistribution dist;
  dist.n = g.sites();
  dist.probability.reserve(size);
  for (const Rational& v : x) {
    dist.probability.push_back(v / total);
    if (dist.probability.back() <= 0) throw std::runtime_error("stationary vector is not positive");
  }

  // Exact residual of pi Q = 0.
  std::vector<Rational> residual(size, Rational{0});
  for (std::uint32_t s = 0; s < size; ++s) {
    residual[s] += dist.probability[s] * g.diagonal(s);
    for (const auto& [t, rate] : g.row(s)) residual[static_cast<std::size_t>(t)] += dist.probability[s] * rate;
  }
  for (std::uint32_t s = 0; s < size; ++s) {
    if (residual[s] != 0) throw std::runtime_error("nonzero residual at state " + std::to_string(s));
  }
  return dist;
}

std::vector<double> SimulationRun::empirical() const {
  std::vector<double> out(occupation.size(), 0.0);
  if (observed_time <= 0.0) return out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = occupation[i] / observed_time;
  return out;
}

SimulationRun simulate(int n, const RateParams& rates, std::uint64_t events, std::uint64_t burn_in,
                       std::uint64_t seed) {
  if (events == 0) throw std::invalid_argument("event budget must be positive");
  if (burn_in >= events) throw std::invalid_argument("burn-in must be smaller than the event budget");
  const Generator g(n, rates);

  // Floating copies of each row's rates; the clock is a statistical check only.
  std::vector<std::vector<std::pair<std::uint64_t, double>>> rows(g.state_count());
  std::vector<double> totals(g.state_count(), 0.0);
  for (std::size_t s = 0; s < rows.size(); ++s) {
    for (const auto& [t, rate] : g.row(s)) {
      rows[s].emplace_back(t, rate.get_d());
      totals[s] += rate.get_d();
    }
  }

  SimulationRun run{.n = n, .rates = rates, .seed = seed, .events = events, .burn_in = burn_in};
  run.occupation.assign(g.state_count(), 0.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::uint64_t state = 0;
  for (std::uint64_t e = 0; e < events; ++e) {
    const double total = totals[state];
    const double dwell = std::exponential_distribution<double>(total)(rng);
    if (e >= burn_in) {
      run.occupation[state] += dwell;
      run.observed_time += dwell;
    }
    double pick = unit(rng) * total;
    const auto& row = rows[state];
    std::uint64_t next = row.back().first;
    for (const auto& [t, rate] : row) {
      if (pick < rate) {
        next = t;
        break;
      }
      pick -= rate;
    }
    state = next;
  }
  return run;
}

}  // namespace tasep
