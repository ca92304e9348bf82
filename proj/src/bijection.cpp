#include "tasep/bijection.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace tasep {

namespace {

using Node = Tree::Node;

VertexId& child(Node& n, Side s) { return s == Side::Left ? n.left : n.right; }

Side side_in(const std::vector<Node>& nodes, VertexId v) {
  const VertexId p = nodes[static_cast<std::size_t>(v)].parent;
  if (p == kNoVertex) return Side::Root;
  return nodes[static_cast<std::size_t>(p)].left == v ? Side::Left : Side::Right;
}

std::vector<VertexId> leaves_in_order(const std::vector<Node>& nodes, VertexId root) {
  std::vector<VertexId> out;
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    const Node& n = nodes[static_cast<std::size_t>(v)];
    if (n.left == kNoVertex) {
      out.push_back(v);
    } else {
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  return out;
}

// forward = true gives pi, false gives sigma.
MarkedTree move_segment(const MarkedTree& marked, bool forward) {
  const Tree& t = marked.tree();
  std::vector<Node> nodes = t.nodes();
  const VertexId v = marked.mark();
  const Side v_side = t.side(v);
  const Side removed_side = opposite(v_side);

  // Contract v onto the child on its own side; the other child is dropped.
  const VertexId keep = v_side == Side::Left ? t.node(v).left : t.node(v).right;
  const VertexId parent = t.node(v).parent;
  child(nodes[static_cast<std::size_t>(parent)], v_side) = keep;
  nodes[static_cast<std::size_t>(keep)].parent = parent;

  const auto leaves = leaves_in_order(nodes, 0);
  const auto count = static_cast<std::ptrdiff_t>(leaves.size());
  std::ptrdiff_t pos = 0;
  while (leaves[static_cast<std::size_t>(pos)] != keep) ++pos;

  const bool rightwards = forward ? v_side == Side::Right : v_side == Side::Left;
  const std::ptrdiff_t step = rightwards ? 1 : -1;

  VertexId target = kNoVertex;
  Side new_endpoint_side = removed_side;
  for (std::ptrdiff_t i = pos + step; i >= 0 && i < count; i += step) {
    if (side_in(nodes, leaves[static_cast<std::size_t>(i)]) == v_side) {
      target = leaves[static_cast<std::size_t>(i)];
      break;
    }
  }
  if (target == kNoVertex) {
    // Boundary case: flip orientation, glue at the far end.
    new_endpoint_side = v_side;
    for (std::ptrdiff_t i = rightwards ? count - 1 : 0; i >= 0 && i < count; i -= step) {
      if (side_in(nodes, leaves[static_cast<std::size_t>(i)]) == removed_side) {
        target = leaves[static_cast<std::size_t>(i)];
        break;
      }
    }
    if (target == kNoVertex) throw std::logic_error("no glue site for " + marked.serialize());
  }

  // Replace target by a fresh vertex w holding target and a fresh endpoint.
  const auto w = static_cast<VertexId>(nodes.size());
  const auto fresh = static_cast<VertexId>(nodes.size() + 1);
  const VertexId target_parent = nodes[static_cast<std::size_t>(target)].parent;
  const Side target_side = side_in(nodes, target);
  nodes.push_back({kNoVertex, kNoVertex, target_parent});
  nodes.push_back({kNoVertex, kNoVertex, w});
  child(nodes[static_cast<std::size_t>(target_parent)], target_side) = w;
  child(nodes[static_cast<std::size_t>(w)], new_endpoint_side) = fresh;
  child(nodes[static_cast<std::size_t>(w)], opposite(new_endpoint_side)) = target;
  nodes[static_cast<std::size_t>(target)].parent = w;

  std::vector<VertexId> relabel;
  Tree result = Tree::from_nodes(nodes, 0, &relabel);
  return {std::move(result), relabel[static_cast<std::size_t>(w)]};
}

}  // namespace

MarkedTree pi(const MarkedTree& t) { return move_segment(t, true); }

MarkedTree sigma(const MarkedTree& t) { return move_segment(t, false); }

std::vector<Cycle> cycle_decomposition(int n) {
  const auto all = enumerate_marked(n);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].serialize(), i);

  std::vector<bool> seen(all.size(), false);
  std::vector<Cycle> cycles;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (seen[start]) continue;
    Cycle cycle;
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      cycle.push_back(all[i]);
      const auto it = index.find(pi(all[i]).serialize());
      if (it == index.end()) throw std::logic_error("pi left the marked tree set");
      i = it->second;
    }
    if (i != start) throw std::logic_error("pi is not injective at " + all[i].serialize());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace tasep
