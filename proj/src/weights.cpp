#include "tasep/weights.hpp"

#include <stdexcept>

#include "tasep/bijection.hpp"

namespace tasep {

namespace {

Rational power(const Rational& base, int exponent) {
  Rational out{1};
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string monomial_body(const WeightMonomial& m) {
  std::string out;
  auto factor = [&out](char var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  factor('a', m.l);
  factor('b', m.r);
  return out;
}

// Per marked tree: source and target configuration, and mu_hat.
struct MarkedStep {
  MarkedTree tree;
  Configuration from;
  Configuration to;
  WeightMonomial weight;
};

std::vector<MarkedStep> marked_steps(int n) {
  std::vector<MarkedStep> out;
  for (MarkedTree& m : enumerate_marked(n)) {
    const Configuration from = reduce(forget(m));
    const Configuration to = reduce(forget(pi(m)));
    const WeightMonomial w = mu_hat(m);
    out.push_back({std::move(m), from, to, w});
  }
  return out;
}

std::string pair_label(const Configuration& from, const Configuration& to) {
  return from.to_string() + "->" + to.to_string();
}

}  // namespace

Rational WeightMonomial::evaluate(const RateParams& rates) const {
  // a = 1/alpha, so a^l = 1/alpha^l.
  return 1 / (power(rates.alpha, l) * power(rates.beta, r));
}

std::string WeightMonomial::to_string() const {
  const std::string body = monomial_body(*this);
  return body.empty() ? "1" : body;
}

void WeightPolynomial::add(WeightMonomial m, Coefficient c) {
  if (m.l < 0 || m.r < 0) throw std::invalid_argument("negative weight exponent");
  if (c == 0) return;
  Coefficient& slot = terms_[m];
  if (__builtin_add_overflow(slot, c, &slot)) throw std::overflow_error("weight coefficient overflow");
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

WeightPolynomial operator*(const WeightPolynomial& x, const WeightPolynomial& y) {
  WeightPolynomial out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      WeightPolynomial::Coefficient c = 0;
      if (__builtin_mul_overflow(cx, cy, &c)) throw std::overflow_error("weight coefficient overflow");
      out.add({mx.l + my.l, mx.r + my.r}, c);
    }
  }
  return out;
}

Rational WeightPolynomial::evaluate(const RateParams& rates) const {
  Rational sum{0};
  for (const auto& [m, c] : terms_) sum += m.evaluate(rates) * mpz_class(static_cast<unsigned long>(c));
  return sum;
}

WeightPolynomial::Coefficient WeightPolynomial::total() const {
  Coefficient sum = 0;
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

std::string WeightPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string body = monomial_body(m);
    if (body.empty()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += body;
    }
  }
  return out;
}

WeightMonomial mu(const Tree& t) {
  const auto e = weight_exponents(t);
  return {e.l, e.r};
}

WeightMonomial mu_hat(const MarkedTree& m) {
  const Tree& t = forget(m);
  WeightMonomial w = mu(t);
  const auto ends = t.endpoints();
  // A marked vertex lies on an extreme path exactly when it is the parent
  // of the extreme endpoint; it is never the root for n >= 1.
  if (t.node(ends.front()).parent == m.mark()) --w.l;
  if (t.node(ends.back()).parent == m.mark()) --w.r;
  return w;
}

StationaryDistribution StationaryWeights::distribution(const RateParams& rates) const {
  StationaryDistribution out;
  out.n = n;
  out.probability.assign(weights.size(), Rational{0});
  const Rational z = partition.evaluate(rates);
  for (const auto& [c, w] : weights) out.probability[static_cast<std::size_t>(c.index())] = w.evaluate(rates) / z;
  return out;
}

StationaryWeights stationary_weights(int n) {
  StationaryWeights out;
  out.n = n;
  for (const Configuration& c : all_configurations(n)) out.weights[c];
  for (const Tree& t : enumerate_trees(n)) {
    const WeightMonomial m = mu(t);
    out.weights[reduce(t)].add(m);
    out.partition.add(m);
  }
  return out;
}

std::optional<Bond> connecting_bond(const Configuration& from, const Configuration& to) {
  for (const Bond& b : active_bonds(from)) {
    if (apply(from, b) == to) return b;
  }
  return std::nullopt;
}

Rational transition_rate(const Configuration& from, const Configuration& to, const RateParams& rates) {
  const auto bond = connecting_bond(from, to);
  return bond ? rates.value(bond->rate()) : Rational{0};
}

std::vector<MarkedTree> flux_set(int n, const Configuration& from, const Configuration& to) {
  if (from.size() != n || to.size() != n) throw std::invalid_argument("configuration length differs from n");
  std::vector<MarkedTree> out;
  for (MarkedStep& step : marked_steps(n)) {
    if (step.from == from && step.to == to) out.push_back(std::move(step.tree));
  }
  return out;
}

CheckReport verify_flux_counts(int n) {
  CheckReport report{.name = "flux-counts"};
  std::map<Configuration, std::size_t> fibre;
  for (const Tree& t : enumerate_trees(n)) ++fibre[reduce(t)];
  std::map<std::pair<Configuration, Configuration>, std::size_t> flux;
  for (const MarkedStep& step : marked_steps(n)) ++flux[{step.from, step.to}];

  const RateParams unit;
  const auto configs = all_configurations(n);
  for (const Configuration& from : configs) {
    for (const Configuration& to : configs) {
      ++report.checked;
      const auto it = flux.find({from, to});
      const std::size_t got = it == flux.end() ? 0 : it->second;
      const std::size_t want = connecting_bond(from, to) ? fibre[from] : 0;
      if (got != want) {
        report.fail("|F(" + pair_label(from, to) + ")| = " + std::to_string(got) + ", expected " +
                    std::to_string(want));
      }
    }
  }
  return report;
}

CheckReport verify_flux_identities(int n, const RateParams& rates) {
  return verify_flux_identities(stationary_weights(n), rates);
}

CheckReport verify_flux_identities(const StationaryWeights& weights, const RateParams& rates) {
  CheckReport report{.name = "flux-identities"};
  const int n = weights.n;
  std::map<std::pair<Configuration, Configuration>, Rational> flux;
  std::map<Configuration, Rational> out_of;  // mu_hat((Rf)^-1{C})
  std::map<Configuration, Rational> into;    // mu_hat((Rf pi)^-1{C})
  for (const MarkedStep& step : marked_steps(n)) {
    const Rational w = step.weight.evaluate(rates);
    flux[{step.from, step.to}] += w;
    out_of[step.from] += w;
    into[step.to] += w;
  }

  const auto configs = all_configurations(n);
  std::map<Configuration, Rational> value;
  for (const Configuration& c : configs) value[c] = weights[c].evaluate(rates);

  std::map<Configuration, Rational> expected_in;
  for (const Configuration& from : configs) {
    Rational outflow{0};
    for (const Configuration& to : configs) {
      ++report.checked;
      const Rational rate = transition_rate(from, to, rates);
      const Rational want = value[from] * rate;
      const auto it = flux.find({from, to});
      const Rational got = it == flux.end() ? Rational{0} : it->second;
      if (got != want) {
        report.fail("mu_hat(F(" + pair_label(from, to) + ")) = " + to_string(got) + ", expected " + to_string(want));
      }
      outflow += rate;
      expected_in[to] += want;
    }
    // Summed over the target: mu_hat((Rf)^-1{C}) = mu(R^-1{C}) * out-rate(C).
    if (out_of[from] != value[from] * outflow) {
      report.fail("outflow identity fails at " + from.to_string());
    }
  }
  // Summed over the source: mu_hat((Rf pi)^-1{C}) = sum mu(R^-1{C'}) W(C'->C).
  for (const Configuration& to : configs) {
    if (into[to] != expected_in[to]) report.fail("inflow identity fails at " + to.to_string());
  }
  return report;
}

CheckReport verify_marked_properties(int n) {
  CheckReport report{.name = "marked-properties"};
  for (const MarkedTree& m : enumerate_marked(n)) {
    ++report.checked;
    WeightMonomial shifted = mu_hat(m);
    switch (m.bond().kind) {
      case Bond::Kind::Entry: ++shifted.l; break;
      case Bond::Kind::Exit: ++shifted.r; break;
      case Bond::Kind::Bulk: break;
    }
    if (shifted != mu(forget(m))) {
      report.fail("property (a) fails at " + m.serialize());
    }
    if (mu_hat(pi(m)) != mu_hat(m)) {
      report.fail("property (b) fails at " + m.serialize());
    }
  }
  return report;
}

CheckReport verify_flux_balance(int n, const RateParams& rates) {
  return verify_flux_balance(stationary_weights(n), rates);
}

CheckReport verify_flux_balance(const StationaryWeights& weights, const RateParams& rates) {
  CheckReport report{.name = "flux-balance"};
  const StationaryDistribution p = weights.distribution(rates);
  const auto configs = all_configurations(weights.n);
  std::vector<Rational> inflow(configs.size(), Rational{0});
  std::vector<Rational> outflow(configs.size(), Rational{0});
  for (const Configuration& c : configs) {
    for (const Bond& b : active_bonds(c)) {
      const Rational flow = p[c] * rates.value(b.rate());
      outflow[static_cast<std::size_t>(c.index())] += flow;
      inflow[static_cast<std::size_t>(apply(c, b).index())] += flow;
    }
  }
  for (const Configuration& c : configs) {
    ++report.checked;
    const auto i = static_cast<std::size_t>(c.index());
    if (inflow[i] != outflow[i]) {
      report.fail("balance fails at " + c.to_string() + ": in " + to_string(inflow[i]) + ", out " +
                  to_string(outflow[i]));
    }
  }
  return report;
}

}  // namespace tasep
