#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tasep/distribution.hpp"
#include "tasep/marked_tree.hpp"
#include "tasep/rational.hpp"
#include "tasep/report.hpp"

namespace tasep {

// Weights live in the inverse rates a = 1/alpha, b = 1/beta, where every
// tree weight is a monomial with nonnegative exponents.

struct WeightMonomial {
  int l = 0;  // power of a
  int r = 0;  // power of b

  Rational evaluate(const RateParams& rates) const;
  std::string to_string() const;

  friend bool operator==(const WeightMonomial&, const WeightMonomial&) = default;
  friend auto operator<=>(const WeightMonomial&, const WeightMonomial&) = default;
};

/// Polynomial in a, b with positive integer coefficients. Terms are kept in
/// lexicographic (l, r) order and zero coefficients are never stored.
class WeightPolynomial {
 public:
  using Coefficient = std::uint64_t;

  WeightPolynomial() = default;
  WeightPolynomial(WeightMonomial m) { add(m); }  // NOLINT(google-explicit-constructor)

  /// Throws std::overflow_error if a coefficient leaves 64 bits.
  void add(WeightMonomial m, Coefficient c = 1);

  WeightPolynomial& operator+=(const WeightPolynomial& other);
  friend WeightPolynomial operator+(WeightPolynomial x, const WeightPolynomial& y) { return x += y; }
  friend WeightPolynomial operator*(const WeightPolynomial& x, const WeightPolynomial& y);

  const std::map<WeightMonomial, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational evaluate(const RateParams& rates) const;
  /// Sum of coefficients, i.e. the value at a = b = 1.
  Coefficient total() const;

  /// e.g. "b + b^2 + a + a*b + a^2"; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;

 private:
  std::map<WeightMonomial, Coefficient> terms_;
};

/// mu(T) = a^l b^r.
WeightMonomial mu(const Tree& t);

/// mu of the underlying tree, not counting the marked vertex when it sits
/// on the leftmost or rightmost path.
WeightMonomial mu_hat(const MarkedTree& t);

struct StationaryWeights {
  int n = 0;
  /// Unnormalized weight of each configuration; every configuration of
  /// length n is present.
  std::map<Configuration, WeightPolynomial> weights;
  WeightPolynomial partition;

  const WeightPolynomial& operator[](const Configuration& c) const { return weights.at(c); }

  /// Exact normalized measure at the given rates.
  StationaryDistribution distribution(const RateParams& rates) const;
};

/// Sums mu over the fibres of reduce. Requires n >= 0 (n = 0 gives the
/// trivial one-point measure).
StationaryWeights stationary_weights(int n);

/// The bond carrying `from` to `to`, if any.
std::optional<Bond> connecting_bond(const Configuration& from, const Configuration& to);

/// W(from -> to); zero when no active bond connects them.
Rational transition_rate(const Configuration& from, const Configuration& to, const RateParams& rates);

/// Marked trees reducing to `from` whose pi-image reduces to `to`.
std::vector<MarkedTree> flux_set(int n, const Configuration& from, const Configuration& to);

/// Flux-set cardinalities at alpha = beta = 1: |F(C'->C)| = |R^-1{C'}| W(C'->C)
/// for every ordered pair.
CheckReport verify_flux_counts(int n);

/// Weighted flux identities at the given rates: for every ordered pair,
/// mu_hat(F(C'->C)) = mu(R^-1{C'}) W(C'->C), plus both summed forms (over
/// the target and over the source). The overload taking weights checks
/// them against the marked trees instead of recomputing.
CheckReport verify_flux_identities(int n, const RateParams& rates);
CheckReport verify_flux_identities(const StationaryWeights& weights, const RateParams& rates);

/// (a) mu_hat * w(bond) = mu(forget) and (b) mu_hat(pi(T)) = mu_hat(T) as
/// monomials, for every marked tree.
CheckReport verify_marked_properties(int n);

/// Global balance: P(C) * out-rate(C) = sum over C' of P(C') W(C'->C), for
/// the normalized tree measure.
CheckReport verify_flux_balance(int n, const RateParams& rates);
CheckReport verify_flux_balance(const StationaryWeights& weights, const RateParams& rates);

}  // namespace tasep
