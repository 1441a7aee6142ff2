#include "gidyn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gidyn {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

void Graph::set_edge(std::size_t a, std::size_t b) {
  adj_[a * n_ + b] = 1;
  adj_[b * n_ + a] = 1;
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a + 1));
    g.set_edge(a, b);
  }
  return g;
}

Graph Graph::from_adjacency(std::size_t n, std::vector<std::uint8_t> adjacency) {
  if (adjacency.size() != n * n) throw std::invalid_argument("adjacency size mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    if (adjacency[a * n + a] != 0)
      throw std::invalid_argument("nonzero diagonal at vertex " + std::to_string(a + 1));
    for (std::size_t b = 0; b < n; ++b) {
      auto v = adjacency[a * n + b];
      if (v > 1) throw std::invalid_argument("adjacency entries must be 0 or 1");
      if (v != adjacency[b * n + a]) throw std::invalid_argument("adjacency is not symmetric");
    }
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(adjacency);
  return g;
}

std::size_t Graph::degree(std::size_t a) const {
  auto row = adj_.begin() + static_cast<std::ptrdiff_t>(a * n_);
  return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), 1));
}

std::size_t Graph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (std::size_t a = 0; a < n_; ++a) d[a] = degree(a);
  return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < n_; ++b)
    if (adjacent(a, b)) out.push_back(b);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

Permutation::Permutation(std::vector<std::size_t> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (auto v : map_) {
    if (v >= map_.size() || seen[v]) throw std::invalid_argument("mapping is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t a = 0; a < map_.size(); ++a) inv[map_[a]] = a;
  return Permutation(std::move(inv));
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  const auto n = g.size();
  if (p.size() != n)
    throw std::invalid_argument("permutation length " + std::to_string(p.size()) +
                                " does not match graph order " + std::to_string(n));
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) adj[p(a) * n + p(b)] = g.adjacent(a, b) ? 1 : 0;
  return Graph::from_adjacency(n, std::move(adj));
}

bool SrgParams::feasible() const {
  if (!(lambda < k && k < n && mu <= k)) return false;
  return k * (k - lambda - 1) == (n - k - 1) * mu;
}

std::string SrgParams::to_string() const {
  std::ostringstream os;
  os << '(' << n << ',' << k << ',' << lambda << ',' << mu << ')';
  return os.str();
}

std::optional<SrgParams> detect_srg(const Graph& g) {
  const auto n = g.size();
  if (n < 3) return std::nullopt;
  const auto k = g.degree(0);
  for (std::size_t a = 1; a < n; ++a)
    if (g.degree(a) != k) return std::nullopt;
  if (k == 0 || k == n - 1) return std::nullopt;

  std::optional<std::size_t> lambda, mu;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t common = 0;
      for (std::size_t c = 0; c < n; ++c) common += g.adjacent(a, c) && g.adjacent(b, c);
      auto& slot = g.adjacent(a, b) ? lambda : mu;
      if (!slot) slot = common;
      else if (*slot != common) return std::nullopt;
    }
  }
  return SrgParams{n, k, *lambda, *mu};
}

}  // namespace gidyn
