#include "tasep/marked_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace tasep {

namespace {

void serialize_marked(const Tree& t, VertexId v, VertexId mark, std::string& out) {
  if (t.is_endpoint(v)) {
    out += 'L';
    return;
  }
  out += '(';
  serialize_marked(t, t.node(v).left, mark, out);
  serialize_marked(t, t.node(v).right, mark, out);
  out += ')';
  if (v == mark) out += '*';
}

}  // namespace

MarkedTree::MarkedTree(Tree tree, VertexId mark) : tree_(std::move(tree)), mark_(mark) {
  if (tree_.site_count() < 1) {
    throw std::invalid_argument("marked trees need n >= 1");
  }
  if (!is_last_branching_vertex(tree_, mark_)) {
    throw std::invalid_argument("mark " + std::to_string(mark_) + " is not a last branching vertex of " +
                                tree_.serialize());
  }
}

MarkedTree MarkedTree::parse(std::string_view text) {
  // Strip the single '*' and remember which internal vertex it follows:
  // the vertex whose ')' precedes it. Internal vertices are numbered in
  // pre-order, i.e. in order of their '('.
  std::string plain;
  plain.reserve(text.size());
  std::vector<VertexId> open;
  VertexId next = 0;
  VertexId last_closed = kNoVertex;
  VertexId mark = kNoVertex;
  int stars = 0;
  for (char c : text) {
    if (c == '*') {
      if (last_closed == kNoVertex || (!plain.empty() && plain.back() != ')')) {
        throw std::invalid_argument("'*' must follow ')' in " + std::string(text));
      }
      mark = last_closed;
      ++stars;
      continue;
    }
    plain += c;
    if (c == '(') {
      open.push_back(next++);
    } else if (c == 'L') {
      ++next;
    } else if (c == ')') {
      if (open.empty()) throw std::invalid_argument("unbalanced ')' in " + std::string(text));
      last_closed = open.back();
      open.pop_back();
    }
  }
  if (stars != 1) throw std::invalid_argument("marked tree needs exactly one '*': " + std::string(text));
  return {Tree::parse(plain), mark};
}

std::string MarkedTree::serialize() const {
  std::string out;
  serialize_marked(tree_, 0, mark_, out);
  return out;
}

std::vector<MarkedTree> enumerate_marked(int n) {
  if (n < 1) throw std::invalid_argument("marked trees need n >= 1");
  std::vector<std::pair<std::string, MarkedTree>> keyed;
  keyed.reserve(binomial(2 * n, n));
  for (Tree& t : enumerate_trees(n)) {
    for (VertexId v : last_branching_vertices(t)) {
      MarkedTree m(t, v);
      keyed.emplace_back(m.serialize(), std::move(m));
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<MarkedTree> out;
  out.reserve(keyed.size());
  for (auto& [key, m] : keyed) out.push_back(std::move(m));
  return out;
}

}  // namespace tasep
