#pragma once

#include <cstddef>
#include <vector>

#include "gidyn/graph.hpp"

namespace gidyn {

/// Order-m Latin square, row-major, symbols 1..m.
class LatinSquare {
 public:
  /// Throws std::invalid_argument naming the first repeated row or column.
  explicit LatinSquare(std::vector<std::vector<int>> rows);

  std::size_t order() const { return rows_.size(); }
  int at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

/// Cells are vertices (row-major); two cells are adjacent when they share a
/// row, a column or a symbol.
Graph latin_square_graph(const LatinSquare& ls);

}  // namespace gidyn
