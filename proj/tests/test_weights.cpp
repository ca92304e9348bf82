#include <doctest.h>

#include <stdexcept>

#include "tasep/bijection.hpp"
#include "tasep/weights.hpp"

using namespace tasep;

namespace {

RateParams rates(const char* a, const char* b) { return {parse_rational(a), parse_rational(b)}; }

WeightPolynomial poly(std::initializer_list<std::pair<int, int>> monomials) {
  WeightPolynomial p;
  for (auto [l, r] : monomials) p.add({l, r});
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(to_string(parse_rational("1/1")) == "1/1");
  CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(to_decimal(Rational(1, 5), 0) == "0");
  for (const char* bad : {"0.5", "1/0", "a/b", "", "1/-2"}) CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  CHECK_THROWS_AS(rates("0/1", "1/2").validate(), std::invalid_argument);
  CHECK_THROWS_AS(rates("3/2", "1/2").validate(), std::invalid_argument);
  CHECK_NOTHROW(rates("1/1", "1/10").validate());
}

TEST_CASE("mu and mu_hat") {
  CHECK(mu(Tree::parse("(((LL)L)L)")) == WeightMonomial{2, 0});
  CHECK(mu(Tree::parse("((LL)(LL))")) == WeightMonomial{1, 1});
  CHECK(mu(Tree::parse("(LL)")) == WeightMonomial{0, 0});

  CHECK(mu_hat(MarkedTree::parse("(((LL)*L)L)")) == WeightMonomial{1, 0});
  // Mark on the rightmost path of a tree with mu = a b^2.
  const MarkedTree right = MarkedTree::parse("((LL)(L(LL)*))");
  CHECK(mu(forget(right)) == WeightMonomial{1, 2});
  CHECK(mu_hat(right) == WeightMonomial{1, 1});
  // Mark off both extreme paths.
  const MarkedTree inner = MarkedTree::parse("((L(LL)*)L)");
  CHECK(mu_hat(inner) == mu(forget(inner)));
}

TEST_CASE("polynomial arithmetic") {
  const WeightPolynomial x = poly({{1, 0}, {0, 1}});
  const WeightPolynomial sq = x * x;
  CHECK(sq.to_string() == "b^2 + 2*a*b + a^2");
  CHECK(sq.total() == 4);
  CHECK((x + x).to_string() == "2*b + 2*a");
  CHECK(sq.evaluate(rates("1/2", "1/3")) == Rational(25));
  CHECK(WeightPolynomial().to_string() == "0");
}

TEST_CASE("stationary weights") {
  const auto w1 = stationary_weights(1);
  CHECK(w1[Configuration::parse("1")] == poly({{0, 1}}));
  CHECK(w1[Configuration::parse("0")] == poly({{1, 0}}));
  CHECK(w1.distribution(rates("1/2", "1/3"))[Configuration::parse("1")] == Rational(3, 5));  // alpha/(alpha+beta)

  const auto w2 = stationary_weights(2);
  CHECK(w2[Configuration::parse("00")] == poly({{2, 0}}));
  CHECK(w2[Configuration::parse("10")] == poly({{1, 0}, {0, 1}}));
  CHECK(w2[Configuration::parse("11")] == poly({{0, 2}}));
  CHECK(w2[Configuration::parse("01")] == poly({{1, 1}}));

  const auto p = w2.distribution(RateParams{});
  CHECK(p[Configuration::parse("10")] == Rational(2, 5));
  CHECK(p[Configuration::parse("00")] == Rational(1, 5));
  CHECK(p[Configuration::parse("01")] == Rational(1, 5));
  CHECK(p[Configuration::parse("11")] == Rational(1, 5));

  // Hand-solved 4-state balance at alpha = 1/2, beta = 1/3.
  const auto q = w2.distribution(rates("1/2", "1/3"));
  CHECK(q[Configuration::parse("00")] == Rational(1, 6));
  CHECK(q[Configuration::parse("10")] == Rational(5, 24));
  CHECK(q[Configuration::parse("01")] == Rational(1, 4));
  CHECK(q[Configuration::parse("11")] == Rational(3, 8));

  CHECK(stationary_weights(3).partition.total() == 14);
  for (int n = 1; n <= 10; ++n) CHECK(stationary_weights(n).partition.total() == catalan(n + 1));
}

TEST_CASE("flux sets") {
  const auto c00 = Configuration::parse("00");
  const auto c10 = Configuration::parse("10");
  const auto c01 = Configuration::parse("01");
  CHECK(flux_set(2, c00, c10).size() == 1);
  CHECK(flux_set(2, c00, c01).empty());
  CHECK(flux_set(2, c10, c01).size() == 2);
  CHECK_THROWS_AS(flux_set(3, c00, c10), std::invalid_argument);
}

TEST_CASE("flux identities") {
  for (int n = 1; n <= 6; ++n) CHECK(verify_flux_counts(n).passed);
  CHECK(verify_flux_identities(2, RateParams{}).passed);
  CHECK(verify_flux_identities(3, rates("1/2", "1/3")).passed);
  CHECK(verify_flux_balance(3, rates("1/2", "1/3")).passed);
  CHECK(verify_flux_balance(5, rates("3/4", "1/10")).passed);
}

TEST_CASE("mutated weights are caught") {
  // Drop the contribution of one tree of the 10 fibre.
  StationaryWeights w = stationary_weights(2);
  const auto c10 = Configuration::parse("10");
  w.weights[c10] = poly({{1, 0}});
  const CheckReport flux = verify_flux_identities(w, RateParams{});
  CHECK_FALSE(flux.passed);
  CHECK(flux.counterexample.find("10") != std::string::npos);
  CHECK_FALSE(verify_flux_balance(w, RateParams{}).passed);
}

TEST_CASE("marked properties") {
  CHECK(verify_marked_properties(2).passed);
  CHECK(verify_marked_properties(3).passed);
  for (const MarkedTree& m : enumerate_marked(4)) {
    if (m.bond().kind == Bond::Kind::Bulk) CHECK(mu_hat(m) == mu(forget(m)));
  }
}
