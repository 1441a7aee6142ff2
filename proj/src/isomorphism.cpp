#include "gidyn/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace gidyn {
namespace {

struct Search {
  const Graph& g1;
  const Graph& g2;
  const std::vector<std::size_t>& c1;
  const std::vector<std::size_t>& c2;
  std::vector<std::size_t> order;
  std::vector<std::size_t> image;
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const auto v = order[depth];
    for (std::size_t w = 0; w < g2.size(); ++w) {
      if (used[w] || c1[v] != c2[w]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const auto u = order[d];
        ok = g1.adjacent(u, v) == g2.adjacent(image[u], w);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(const Graph& g1, const Graph& g2) {
  std::vector<std::size_t> c1 = g1.degrees(), c2 = g2.degrees();
  std::size_t classes = 0;
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::map<Signature, std::size_t> palette;
    auto signature = [](const Graph& g, const std::vector<std::size_t>& c, std::size_t v) {
      Signature s{c[v], {}};
      for (auto u : g.neighbors(v)) s.second.push_back(c[u]);
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Signature> s1, s2;
    for (std::size_t v = 0; v < g1.size(); ++v) s1.push_back(signature(g1, c1, v));
    for (std::size_t v = 0; v < g2.size(); ++v) s2.push_back(signature(g2, c2, v));
    for (const auto& s : s1) palette.emplace(s, 0);
    for (const auto& s : s2) palette.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : palette) id = next++;
    for (std::size_t v = 0; v < g1.size(); ++v) c1[v] = palette[s1[v]];
    for (std::size_t v = 0; v < g2.size(); ++v) c2[v] = palette[s2[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {c1, c2};
}

IsoVerdict brute_force_isomorphic(const Graph& g1, const Graph& g2, std::size_t max_n) {
  const auto n = g1.size();
  if (n != g2.size()) return {IsoOutcome::NonIsomorphic, std::nullopt};
  if (n > max_n) return {IsoOutcome::TooLarge, std::nullopt};
  if (g1.edge_count() != g2.edge_count()) return {IsoOutcome::NonIsomorphic, std::nullopt};

  const auto [c1, c2] = refine_colors(g1, g2);
  auto h1 = c1, h2 = c2;
  std::sort(h1.begin(), h1.end());
  std::sort(h2.begin(), h2.end());
  if (h1 != h2) return {IsoOutcome::NonIsomorphic, std::nullopt};

  std::map<std::size_t, std::size_t> class_size;
  for (auto c : c1) ++class_size[c];
  Search s{g1, g2, c1, c2, {}, std::vector<std::size_t>(n), std::vector<bool>(n, false)};
  // Smallest colour classes first, then prefer vertices tied to those already placed.
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    std::pair<std::size_t, std::size_t> best_key{};
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (auto u : s.order) links += g1.adjacent(u, v);
      const std::pair<std::size_t, std::size_t> key{class_size[c1[v]], n - links};
      if (best == n || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    placed[best] = true;
    s.order.push_back(best);
  }
  if (!s.extend(0)) return {IsoOutcome::NonIsomorphic, std::nullopt};
  return {IsoOutcome::Isomorphic, Permutation(s.image)};
}

}  // namespace gidyn
