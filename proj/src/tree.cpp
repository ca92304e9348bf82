#include "tasep/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tasep {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Tree run() {
    std::vector<Tree::Node> nodes;
    parse_into(nodes, kNoVertex);
    if (pos_ != text_.size()) fail("trailing characters");
    return Tree::from_nodes(nodes, 0);
  }

 private:
  VertexId parse_into(std::vector<Tree::Node>& nodes, VertexId parent) {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const auto id = static_cast<VertexId>(nodes.size());
    nodes.push_back({kNoVertex, kNoVertex, parent});
    const char c = text_[pos_++];
    if (c == 'L') return id;
    if (c != '(') fail("expected 'L' or '('");
    const VertexId left = parse_into(nodes, id);
    const VertexId right = parse_into(nodes, id);
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    nodes[static_cast<std::size_t>(id)].left = left;
    nodes[static_cast<std::size_t>(id)].right = right;
    return id;
  }

  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("malformed tree '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void serialize_into(const Tree& t, VertexId v, std::string& out) {
  if (t.is_endpoint(v)) {
    out += 'L';
    return;
  }
  out += '(';
  serialize_into(t, t.node(v).left, out);
  serialize_into(t, t.node(v).right, out);
  out += ')';
}

}  // namespace

Tree Tree::endpoint() { return Tree({Node{}}); }

Tree Tree::join(const Tree& left, const Tree& right) {
  std::vector<Node> nodes;
  nodes.reserve(left.nodes_.size() + right.nodes_.size() + 1);
  const auto left_offset = VertexId{1};
  const auto right_offset = static_cast<VertexId>(1 + left.nodes_.size());
  nodes.push_back({left_offset, right_offset, kNoVertex});
  auto append = [&nodes](const Tree& sub, VertexId offset) {
    for (const Node& n : sub.nodes_) {
      Node copy = n;
      if (copy.left != kNoVertex) copy.left += offset;
      if (copy.right != kNoVertex) copy.right += offset;
      copy.parent = copy.parent == kNoVertex ? 0 : copy.parent + offset;
      nodes.push_back(copy);
    }
  };
  append(left, left_offset);
  append(right, right_offset);
  return Tree(std::move(nodes));
}

Tree Tree::parse(std::string_view text) { return Parser(text).run(); }

Tree Tree::from_nodes(const std::vector<Node>& nodes, VertexId root, std::vector<VertexId>* relabel) {
  std::vector<VertexId> ids(nodes.size(), kNoVertex);
  std::vector<Node> out;
  out.reserve(nodes.size());
  // Iterative pre-order walk; (old id, new parent id).
  std::vector<std::pair<VertexId, VertexId>> stack{{root, kNoVertex}};
  while (!stack.empty()) {
    const auto [old_id, parent] = stack.back();
    stack.pop_back();
    const auto new_id = static_cast<VertexId>(out.size());
    ids[static_cast<std::size_t>(old_id)] = new_id;
    out.push_back({kNoVertex, kNoVertex, parent});
    if (parent != kNoVertex) {
      Node& p = out[static_cast<std::size_t>(parent)];
      (p.left == kNoVertex ? p.left : p.right) = new_id;
    }
    const Node& n = nodes[static_cast<std::size_t>(old_id)];
    if ((n.left == kNoVertex) != (n.right == kNoVertex)) {
      throw std::invalid_argument("tree vertex with exactly one child");
    }
    if (n.left != kNoVertex) {
      stack.emplace_back(n.right, new_id);
      stack.emplace_back(n.left, new_id);
    }
  }
  if (relabel != nullptr) *relabel = std::move(ids);
  return Tree(std::move(out));
}

std::string Tree::serialize() const {
  std::string out;
  out.reserve(nodes_.size() * 2);
  serialize_into(*this, 0, out);
  return out;
}

Side Tree::side(VertexId v) const {
  const VertexId p = node(v).parent;
  if (p == kNoVertex) return Side::Root;
  return node(p).left == v ? Side::Left : Side::Right;
}

std::vector<VertexId> Tree::endpoints() const {
  // Pre-order visits the left subtree before the right one, so endpoints
  // come out in left-to-right order.
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(endpoint_count()));
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (is_endpoint(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> Tree::endpoint_ranks() const {
  std::vector<int> rank(nodes_.size(), 0);
  int next = 1;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (is_endpoint(v)) rank[static_cast<std::size_t>(v)] = next++;
  }
  return rank;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > UINT64_MAX) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t catalan(int m) {
  if (m < 0) throw std::invalid_argument("catalan index must be nonnegative");
  return binomial(2 * m, m) / static_cast<std::uint64_t>(m + 1);
}

std::vector<Tree> enumerate_trees(int n) {
  if (n < 0) throw std::invalid_argument("site count must be nonnegative");
  const int endpoints = n + 2;
  // by_size[m] = all trees with m endpoints.
  std::vector<std::vector<Tree>> by_size(static_cast<std::size_t>(endpoints) + 1);
  by_size[1].push_back(Tree::endpoint());
  for (int m = 2; m <= endpoints; ++m) {
    auto& bucket = by_size[static_cast<std::size_t>(m)];
    bucket.reserve(catalan(m - 1));
    for (int k = 1; k < m; ++k) {
      for (const Tree& left : by_size[static_cast<std::size_t>(k)]) {
        for (const Tree& right : by_size[static_cast<std::size_t>(m - k)]) {
          bucket.push_back(Tree::join(left, right));
        }
      }
    }
  }
  auto& trees = by_size[static_cast<std::size_t>(endpoints)];
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) keys.emplace_back(trees[i].serialize(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Tree> out;
  out.reserve(trees.size());
  for (const auto& [key, i] : keys) out.push_back(std::move(trees[i]));
  return out;
}

Configuration reduce(const Tree& t) {
  const int n = t.site_count();
  if (n < 0) throw std::invalid_argument("reduce needs at least two endpoints");
  const auto ends = t.endpoints();
  std::uint64_t bits = 0;
  for (int k = 1; k <= n; ++k) {
    if (t.side(ends[static_cast<std::size_t>(k)]) == Side::Left) bits |= std::uint64_t{1} << (k - 1);
  }
  return {n, bits};
}

WeightExponents weight_exponents(const Tree& t) {
  auto depth = [&t](auto child_of) {
    int edges = 0;
    for (VertexId v = 0; !t.is_endpoint(v); v = child_of(t.node(v))) ++edges;
    return edges;
  };
  if (t.vertex_count() == 1) return {};
  const int left_edges = depth([](const Tree::Node& n) { return n.left; });
  const int right_edges = depth([](const Tree::Node& n) { return n.right; });
  return {left_edges - 1, right_edges - 1};
}

bool is_last_branching_vertex(const Tree& t, VertexId v) {
  if (v < 0 || v >= t.vertex_count() || t.is_endpoint(v)) return false;
  return t.is_endpoint(t.node(v).left) && t.is_endpoint(t.node(v).right);
}

std::vector<VertexId> last_branching_vertices(const Tree& t) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    if (is_last_branching_vertex(t, v)) out.push_back(v);
  }
  return out;
}

Bond bond_of_lbv(const Tree& t, VertexId v) {
  if (!is_last_branching_vertex(t, v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not a last branching vertex");
  }
  const int n = t.site_count();
  const int j = t.endpoint_ranks()[static_cast<std::size_t>(t.node(v).left)];
  if (j == 1) return Bond::entry();
  if (j + 1 == n + 2) return Bond::exit();
  return Bond::bulk(j - 1);
}

}  // namespace tasep
