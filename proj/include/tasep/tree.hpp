#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tasep/configuration.hpp"

namespace tasep {

/// Vertex identifier: pre-order index, root = 0.
using VertexId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;

enum class Side { Root, Left, Right };

constexpr Side opposite(Side s) {
  return s == Side::Left ? Side::Right : (s == Side::Right ? Side::Left : Side::Root);
}

/// Full plane binary tree with n + 2 endpoints.
///
/// Stored as a pre-order node array, so two trees are equal exactly when
/// their node arrays are equal. Serialization grammar:
///   tree := "L" | "(" tree tree ")"
class Tree {
 public:
  struct Node {
    VertexId left = kNoVertex;
    VertexId right = kNoVertex;
    VertexId parent = kNoVertex;

    friend bool operator==(const Node&, const Node&) = default;
  };

  /// The single-endpoint tree. Only useful as a building block; a complete
  /// tree has at least two endpoints.
  static Tree endpoint();
  static Tree join(const Tree& left, const Tree& right);

  /// Throws std::invalid_argument on malformed input, including trailing text.
  static Tree parse(std::string_view text);

  /// Rebuilds a tree from an arbitrary node array rooted at `root`. Returns
  /// the tree and, through `relabel`, the new id of every reachable node
  /// (kNoVertex for unreachable ones).
  static Tree from_nodes(const std::vector<Node>& nodes, VertexId root,
                         std::vector<VertexId>* relabel = nullptr);

  std::string serialize() const;

  int vertex_count() const { return static_cast<int>(nodes_.size()); }
  int endpoint_count() const { return (vertex_count() + 1) / 2; }
  int internal_count() const { return vertex_count() / 2; }
  /// n = endpoints - 2.
  int site_count() const { return endpoint_count() - 2; }

  const Node& node(VertexId v) const { return nodes_[static_cast<std::size_t>(v)]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool is_endpoint(VertexId v) const { return node(v).left == kNoVertex; }
  Side side(VertexId v) const;

  /// Endpoints in left-to-right order.
  std::vector<VertexId> endpoints() const;

  /// 1-based left-to-right rank of every endpoint; 0 for internal vertices.
  std::vector<int> endpoint_ranks() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  explicit Tree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  std::vector<Node> nodes_;
};

/// Catalan number C_m; throws std::overflow_error past 64 bits.
std::uint64_t catalan(int m);
std::uint64_t binomial(int n, int k);

/// All trees with n + 2 endpoints, sorted by serialization (ASCII order, so
/// '(' < ')' < 'L').
std::vector<Tree> enumerate_trees(int n);

/// Reduced configuration: site k is Filled iff endpoint k + 1 is a left child.
Configuration reduce(const Tree& t);

struct WeightExponents {
  int l = 0;
  int r = 0;

  friend bool operator==(const WeightExponents&, const WeightExponents&) = default;
  friend auto operator<=>(const WeightExponents&, const WeightExponents&) = default;
};

/// Internal vertices strictly between the root and the leftmost (l) or
/// rightmost (r) endpoint.
WeightExponents weight_exponents(const Tree& t);

/// Internal vertices whose two children are both endpoints, in left-to-right
/// order of their endpoint pairs.
std::vector<VertexId> last_branching_vertices(const Tree& t);

bool is_last_branching_vertex(const Tree& t, VertexId v);

/// The active bond of reduce(t) that the last branching vertex `v` stands
/// for. Throws std::invalid_argument if `v` is not a last branching vertex.
Bond bond_of_lbv(const Tree& t, VertexId v);

}  // namespace tasep
