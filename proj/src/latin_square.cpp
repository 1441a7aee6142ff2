#include "gidyn/latin_square.hpp"

#include <stdexcept>
#include <string>

namespace gidyn {

LatinSquare::LatinSquare(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  const auto m = rows_.size();
  if (m == 0) throw std::invalid_argument("latin square: empty");
  for (std::size_t r = 0; r < m; ++r) {
    if (rows_[r].size() != m)
      throw std::invalid_argument("latin square: row " + std::to_string(r + 1) + " has wrong length");
    std::vector<bool> seen(m + 1, false);
    for (int v : rows_[r]) {
      if (v < 1 || static_cast<std::size_t>(v) > m)
        throw std::invalid_argument("latin square: row " + std::to_string(r + 1) + " has symbol out of range");
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("latin square: row " + std::to_string(r + 1) + " repeats symbol " +
                                    std::to_string(v));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<bool> seen(m + 1, false);
    for (std::size_t r = 0; r < m; ++r) {
      const auto v = static_cast<std::size_t>(rows_[r][c]);
      if (seen[v])
        throw std::invalid_argument("latin square: column " + std::to_string(c + 1) + " repeats symbol " +
                                    std::to_string(v));
      seen[v] = true;
    }
  }
}

Graph latin_square_graph(const LatinSquare& ls) {
  const auto m = ls.order();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < m * m; ++a) {
    for (std::size_t b = a + 1; b < m * m; ++b) {
      const auto ra = a / m, ca = a % m, rb = b / m, cb = b % m;
      if (ra == rb || ca == cb || ls.at(ra, ca) == ls.at(rb, cb)) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(m * m, edges);
}

}  // namespace gidyn
