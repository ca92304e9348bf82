#include "tasep/tableaux.hpp"

#include <functional>
#include <stdexcept>

namespace tasep {

namespace {

std::string cell_name(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

// Endpoint kinds read left to right: true = east step (left child).
std::vector<bool> endpoint_steps(const Tree& t) {
  std::vector<bool> east;
  for (VertexId e : t.endpoints()) east.push_back(t.side(e) == Side::Left);
  return east;
}

// Steps of the boundary path of a diagram, from its bottom-left corner.
std::vector<bool> boundary_steps(const YoungDiagram& d) {
  std::vector<bool> east;
  int x = 0;
  for (int r = d.row_count(); r >= 1; --r) {
    for (; x < d.rows()[static_cast<std::size_t>(r - 1)]; ++x) east.push_back(true);
    east.push_back(false);
  }
  return east;
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1])) {
      throw std::invalid_argument("partition parts must be positive and weakly decreasing");
    }
  }
}

int YoungDiagram::column_height(int col) const {
  int h = 0;
  while (h < row_count() && rows_[static_cast<std::size_t>(h)] >= col) ++h;
  return h;
}

bool YoungDiagram::contains(Cell c) const {
  return c.row >= 1 && c.row <= row_count() && c.col >= 1 && c.col <= rows_[static_cast<std::size_t>(c.row - 1)];
}

std::string CatalanTableau::to_string() const {
  std::string out;
  for (const auto& row : fill) {
    if (!out.empty()) out += '/';
    for (int v : row) out += static_cast<char>('0' + v);
  }
  return out;
}

std::string CatalanTableau::render() const {
  std::string out;
  for (const auto& row : fill) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ' ';
      out += static_cast<char>('0' + row[i]);
    }
    out += '\n';
  }
  return out;
}

TableauReport validate_tableau(const CatalanTableau& tab, int expected_index) {
  TableauReport report;
  auto violation = [&report](std::string what) {
    report.valid = false;
    report.violations.push_back(std::move(what));
  };
  const YoungDiagram& shape = tab.shape;
  if (tab.fill.size() != static_cast<std::size_t>(shape.row_count())) {
    violation("fill has " + std::to_string(tab.fill.size()) + " rows, shape has " +
              std::to_string(shape.row_count()));
    return report;
  }
  for (int r = 1; r <= shape.row_count(); ++r) {
    const auto& row = tab.fill[static_cast<std::size_t>(r - 1)];
    if (row.size() != static_cast<std::size_t>(shape.rows()[static_cast<std::size_t>(r - 1)])) {
      violation("row " + std::to_string(r) + " length does not match the shape");
      return report;
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0 && row[c] != 1) {
        violation("cell " + cell_name({r, static_cast<int>(c) + 1}) + " is not 0/1");
        return report;
      }
    }
  }
  if (expected_index >= 0 && shape.index() != expected_index) {
    violation("index " + std::to_string(shape.index()) + ", expected " + std::to_string(expected_index));
  }
  for (int c = 1; c <= shape.width(); ++c) {
    int ones = 0;
    for (int r = 1; r <= shape.column_height(c); ++r) ones += tab.at({r, c});
    if (c == 1 && ones != 0) violation("property 1: leftmost column holds a 1");
    if (c > 1 && ones != 1) {
      violation("property 1: column " + std::to_string(c) + " holds " + std::to_string(ones) + " ones");
    }
  }
  for (int r = 1; r <= shape.row_count(); ++r) {
    for (int c = 1; c <= shape.rows()[static_cast<std::size_t>(r - 1)]; ++c) {
      if (tab.at({r, c}) != 0) continue;
      bool one_above = false;
      for (int i = 1; i < r; ++i) one_above = one_above || tab.at({i, c}) == 1;
      bool one_left = false;
      for (int j = 1; j < c; ++j) one_left = one_left || tab.at({r, j}) == 1;
      if (one_above && one_left) violation("property 2: 0 at " + cell_name({r, c}) + " has a 1 above and to its left");
    }
  }
  return report;
}

std::vector<CatalanTableau> enumerate_catalan_tableaux(int index) {
  std::vector<CatalanTableau> out;
  if (index < 1) return out;
  for (int width = 1; width <= index; ++width) {
    const int height = index + 1 - width;
    std::vector<int> rows(static_cast<std::size_t>(height));
    rows[0] = width;

    std::function<void(std::size_t)> shapes;
    std::function<void(int, CatalanTableau&, std::vector<int>&)> fills;

    // one_row[c] = row of the 1 in column c (0 for column 1).
    fills = [&](int col, CatalanTableau& tab, std::vector<int>& one_row) {
      if (col > tab.shape.width()) {
        out.push_back(tab);
        return;
      }
      const int h = tab.shape.column_height(col);
      for (int r = 1; r <= h; ++r) {
        // Property 2 for the new column: each 0 below the new 1 must not
        // see a 1 to its left.
        bool ok = true;
        for (int i = r + 1; i <= h && ok; ++i) {
          for (int j = 2; j < col; ++j) {
            if (one_row[static_cast<std::size_t>(j)] == i) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        tab.fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(col - 1)] = 1;
        one_row[static_cast<std::size_t>(col)] = r;
        fills(col + 1, tab, one_row);
        one_row[static_cast<std::size_t>(col)] = 0;
        tab.fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(col - 1)] = 0;
      }
    };

    shapes = [&](std::size_t i) {
      if (i == rows.size()) {
        CatalanTableau tab{YoungDiagram(rows), {}};
        for (int len : rows) tab.fill.emplace_back(static_cast<std::size_t>(len), 0);
        std::vector<int> one_row(static_cast<std::size_t>(width) + 1, 0);
        fills(2, tab, one_row);
        return;
      }
      for (int len = 1; len <= rows[i - 1]; ++len) {
        rows[i] = len;
        shapes(i + 1);
      }
    };
    shapes(1);
  }
  return out;
}

YoungDiagram lattice_path(const Tree& t) {
  if (t.site_count() < 0) throw std::invalid_argument("lattice path needs at least two endpoints");
  // Width of each row, bottom row first: the east steps taken before its
  // north step.
  std::vector<int> bottom_up;
  int east = 0;
  for (bool step : endpoint_steps(t)) {
    if (step) {
      ++east;
    } else {
      bottom_up.push_back(east);
    }
  }
  return YoungDiagram(std::vector<int>(bottom_up.rbegin(), bottom_up.rend()));
}

EmbeddedTree embed(const Tree& t) {
  EmbeddedTree out{lattice_path(t), {}};
  const int height = out.shape.row_count();
  // Column of each left-child endpoint, row of each right-child endpoint.
  std::vector<int> col(static_cast<std::size_t>(t.vertex_count()), 0);
  std::vector<int> row(static_cast<std::size_t>(t.vertex_count()), 0);
  int east = 0;
  int north = 0;
  for (VertexId e : t.endpoints()) {
    if (t.side(e) == Side::Left) {
      col[static_cast<std::size_t>(e)] = ++east;
    } else {
      row[static_cast<std::size_t>(e)] = height - north++;
    }
  }
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    if (t.is_endpoint(v)) continue;
    VertexId leftmost = v;
    while (!t.is_endpoint(leftmost)) leftmost = t.node(leftmost).left;
    VertexId rightmost = v;
    while (!t.is_endpoint(rightmost)) rightmost = t.node(rightmost).right;
    out.vertices.push_back(
        {v, {row[static_cast<std::size_t>(rightmost)], col[static_cast<std::size_t>(leftmost)]}, t.side(v)});
  }
  return out;
}

CatalanTableau phi(const Tree& t) {
  const EmbeddedTree e = embed(t);
  CatalanTableau tab{e.shape, {}};
  for (int len : e.shape.rows()) tab.fill.emplace_back(static_cast<std::size_t>(len), 0);
  for (const EmbeddedVertex& v : e.vertices) {
    if (v.side == Side::Right) {
      tab.fill[static_cast<std::size_t>(v.cell.row - 1)][static_cast<std::size_t>(v.cell.col - 1)] = 1;
    }
  }
  return tab;
}

Tree phi_inverse(const CatalanTableau& tab) {
  const TableauReport report = validate_tableau(tab);
  if (!report.valid) throw std::invalid_argument("invalid tableau: " + report.violations.front());

  const std::vector<bool> east = boundary_steps(tab.shape);
  const int height = tab.shape.row_count();
  const auto count = static_cast<int>(east.size());
  std::vector<int> col_of(east.size(), 0);
  std::vector<int> row_of(east.size(), 0);
  std::vector<int> endpoint_of_col(static_cast<std::size_t>(tab.shape.width()) + 1, -1);
  int e = 0;
  int nth = 0;
  for (int i = 0; i < count; ++i) {
    if (east[static_cast<std::size_t>(i)]) {
      col_of[static_cast<std::size_t>(i)] = ++e;
      endpoint_of_col[static_cast<std::size_t>(e)] = i;
    } else {
      row_of[static_cast<std::size_t>(i)] = height - nth++;
    }
  }

  auto reject = [&tab] { throw std::invalid_argument("tableau " + tab.to_string() + " is not in the image of phi"); };

  // The subtree on endpoints first..last sits at (row of last, column of
  // first). Its right child is the next 1 to the right in that row; with no
  // such 1 the right child is the endpoint `last` itself.
  std::function<Tree(int, int)> build = [&](int first, int last) -> Tree {
    if (first == last) return Tree::endpoint();
    if (!east[static_cast<std::size_t>(first)] || east[static_cast<std::size_t>(last)]) reject();
    const int r = row_of[static_cast<std::size_t>(last)];
    const int c = col_of[static_cast<std::size_t>(first)];
    int split = last;  // first endpoint of the right subtree
    const int row_len = tab.shape.rows()[static_cast<std::size_t>(r - 1)];
    for (int j = c + 1; j <= row_len; ++j) {
      if (tab.at({r, j}) == 1) {
        split = endpoint_of_col[static_cast<std::size_t>(j)];
        break;
      }
    }
    if (split <= first || split > last) reject();
    return Tree::join(build(first, split - 1), build(split, last));
  };

  Tree t = build(0, count - 1);
  if (phi(t) != tab) reject();
  return t;
}

}  // namespace tasep
