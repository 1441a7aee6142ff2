#include "gidyn/graph_matrices.hpp"

namespace gidyn {

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.size());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix l(g.size());
  for (auto [u, v] : g.edges()) l.set(u, v, -1.0);
  for (std::size_t a = 0; a < g.size(); ++a) l.set(a, a, static_cast<double>(g.degree(a)));
  return l;
}

}  // namespace gidyn
