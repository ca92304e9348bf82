#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tasep/tree.hpp"

namespace tasep {

/// A tree with exactly one of its last branching vertices marked. Only
/// defined for n >= 1. Serialized like a Tree with the marked vertex's
/// closing parenthesis written as ")*".
class MarkedTree {
 public:
  /// Throws std::invalid_argument unless `mark` is a last branching vertex
  /// of `tree` and the tree has n >= 1.
  MarkedTree(Tree tree, VertexId mark);

  static MarkedTree parse(std::string_view text);

  const Tree& tree() const { return tree_; }
  VertexId mark() const { return mark_; }
  int site_count() const { return tree_.site_count(); }

  /// The active bond of reduce(forget(*this)) that the mark stands for.
  Bond bond() const { return bond_of_lbv(tree_, mark_); }

  std::string serialize() const;

  friend bool operator==(const MarkedTree&, const MarkedTree&) = default;

 private:
  Tree tree_;
  VertexId mark_;
};

inline const Tree& forget(const MarkedTree& m) { return m.tree(); }

/// Every (tree, last branching vertex) pair for trees with n + 2 endpoints,
/// sorted by marked serialization. |result| = binom(2n, n).
std::vector<MarkedTree> enumerate_marked(int n);

}  // namespace tasep
