#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "tasep/bijection.hpp"

using namespace tasep;

namespace {

std::string step(const char* s) { return pi(MarkedTree::parse(s)).serialize(); }
std::string back(const char* s) { return sigma(MarkedTree::parse(s)).serialize(); }

}  // namespace

TEST_CASE("pi on the n = 2 cycles") {
  CHECK(step("(((LL)*L)L)") == "((L(LL)*)L)");
  CHECK(step("((L(LL)*)L)") == "((LL)(LL)*)");
  CHECK(step("((LL)(LL)*)") == "(((LL)*L)L)");

  CHECK(step("(L(L(LL)*))") == "(L((LL)*L))");
  CHECK(step("(L((LL)*L))") == "((LL)*(LL))");
  CHECK(step("((LL)*(LL))") == "(L(L(LL)*))");
}

TEST_CASE("pi on n = 1") {
  CHECK(step("(L(LL)*)") == "((LL)*L)");
  CHECK(step("((LL)*L)") == "(L(LL)*)");
}

TEST_CASE("sigma undoes pi") {
  CHECK(back("((L(LL)*)L)") == "(((LL)*L)L)");
  for (int n = 1; n <= 8; ++n) {
    const auto all = enumerate_marked(n);
    std::set<std::string> images;
    for (const MarkedTree& m : all) {
      const MarkedTree p = pi(m);
      CHECK(sigma(p) == m);
      CHECK(pi(sigma(m)) == m);
      CHECK(p.tree().endpoint_count() == m.tree().endpoint_count());
      CHECK(p.tree().internal_count() == m.tree().internal_count());
      images.insert(p.serialize());
    }
    CHECK(images.size() == all.size());
  }
}

TEST_CASE("every pi step is the marked bond's transition") {
  for (int n = 1; n <= 8; ++n) {
    for (const MarkedTree& m : enumerate_marked(n)) {
      const Configuration from = reduce(forget(m));
      const Configuration to = reduce(forget(pi(m)));
      CHECK(is_active(from, m.bond()));
      CHECK(apply(from, m.bond()) == to);
    }
  }
}

TEST_CASE("one mark per tree realizes each transition") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::vector<MarkedTree>> by_tree;
    for (const MarkedTree& m : enumerate_marked(n)) by_tree[forget(m).serialize()].push_back(m);
    for (const auto& [key, marks] : by_tree) {
      const Configuration from = reduce(forget(marks.front()));
      std::multiset<Configuration> targets;
      for (const MarkedTree& m : marks) targets.insert(reduce(forget(pi(m))));
      std::multiset<Configuration> successors;
      for (const Bond& b : active_bonds(from)) successors.insert(apply(from, b));
      CHECK(targets == successors);
    }
  }
}

TEST_CASE("cycle decomposition") {
  auto lengths = [](int n) {
    std::multiset<std::size_t> out;
    for (const Cycle& c : cycle_decomposition(n)) out.insert(c.size());
    return out;
  };
  CHECK(lengths(1) == std::multiset<std::size_t>{2});
  CHECK(lengths(2) == std::multiset<std::size_t>{3, 3});
  CHECK(lengths(3) == std::multiset<std::size_t>{4, 4, 4, 4, 4});

  const auto cycles = cycle_decomposition(2);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0][0].serialize() == "(((LL)*L)L)");
  CHECK(cycles[1][0].serialize() == "((LL)*(LL))");

  for (int n = 1; n <= 6; ++n) {
    std::size_t covered = 0;
    for (const Cycle& c : cycle_decomposition(n)) {
      covered += c.size();
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(pi(c[i]) == c[(i + 1) % c.size()]);
    }
    CHECK(covered == binomial(2 * n, n));
  }
}

TEST_CASE("invalid marks are rejected") {
  CHECK_THROWS_AS(MarkedTree(Tree::parse("((LL)L)"), 0), std::invalid_argument);
  CHECK_THROWS_AS(MarkedTree(Tree::parse("((LL)L)"), 2), std::invalid_argument);
}
