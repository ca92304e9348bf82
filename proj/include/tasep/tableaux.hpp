#pragma once

#include <string>
#include <vector>

#include "tasep/tree.hpp"

namespace tasep {

/// Cell address, 1-based, row 1 on top (matrix convention).
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Young diagram given by its weakly decreasing positive row lengths.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int width() const { return rows_.empty() ? 0 : rows_.front(); }
  /// Length of column `col` (the transposed partition).
  int column_height(int col) const;
  bool contains(Cell c) const;
  /// lambda_1 + lambda^t_1 - 1.
  int index() const { return width() + row_count() - 1; }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

struct CatalanTableau {
  YoungDiagram shape;
  /// fill[row - 1][col - 1] in {0, 1}; row lengths follow the shape.
  std::vector<std::vector<int>> fill;

  int at(Cell c) const { return fill[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)]; }
  int index() const { return shape.index(); }
  /// Rows joined by '/', e.g. "01/0".
  std::string to_string() const;
  /// Multi-line grid for docs and golden files.
  std::string render() const;

  friend bool operator==(const CatalanTableau&, const CatalanTableau&) = default;
};

struct TableauReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks the fill against the shape and both tableau properties:
///  1. every column but the first holds exactly one 1, the first none;
///  2. no 0 has a 1 above it in its column and a 1 to its left in its row.
/// When `expected_index` is nonnegative the index is checked too.
TableauReport validate_tableau(const CatalanTableau& tab, int expected_index = -1);

/// Every Catalan tableau of the given index, by scanning shapes and
/// column-by-column fillings. Independent of the tree construction.
std::vector<CatalanTableau> enumerate_catalan_tableaux(int index);

/// Diagram whose southeast boundary is the endpoint path of `t`: east for a
/// left-child endpoint, north for a right-child endpoint.
YoungDiagram lattice_path(const Tree& t);

struct EmbeddedVertex {
  VertexId id = kNoVertex;
  Cell cell;
  Side side = Side::Root;
};

/// Internal vertices of `t` placed in lattice_path(t): left-child edges
/// vertical, right-child edges horizontal, so each vertex sits in the column
/// of its subtree's leftmost endpoint and the row of its rightmost endpoint.
struct EmbeddedTree {
  YoungDiagram shape;
  std::vector<EmbeddedVertex> vertices;  // pre-order
};

EmbeddedTree embed(const Tree& t);

/// 1 in every cell holding a right-child vertex, 0 elsewhere.
CatalanTableau phi(const Tree& t);

/// Rebuilds the tree from a valid tableau; throws std::invalid_argument on
/// invalid input (including fillings that are not in the image of phi).
Tree phi_inverse(const CatalanTableau& tab);

}  // namespace tasep
