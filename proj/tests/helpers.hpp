#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gidyn/corpus.hpp"
#include "gidyn/graph.hpp"
#include "gidyn/linalg.hpp"

namespace testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline gidyn::Graph random_graph(std::size_t n, double p, std::mt19937_64& gen) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(gen)) edges.emplace_back(a, b);
  return gidyn::Graph::from_edges(n, edges);
}

inline gidyn::Permutation random_permutation(std::size_t n, std::mt19937_64& gen) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  std::shuffle(m.begin(), m.end(), gen);
  return gidyn::Permutation(m);
}

inline gidyn::Matrix make_matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> values) {
  gidyn::Matrix m(rows, cols);
  std::size_t i = 0;
  for (double v : values) {
    m(i / cols, i % cols) = v;
    ++i;
  }
  return m;
}

inline gidyn::SymmetricMatrix random_symmetric(std::size_t n, double scale, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-scale, scale);
  gidyn::Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = u(gen);
  return gidyn::SymmetricMatrix(m);
}

inline gidyn::CorpusEntry corpus(const std::string& name) {
  auto e = gidyn::find_corpus_entry(name, std::string(GIDYN_TEST_CORPUS_DIR));
  if (!e) throw std::runtime_error("missing corpus entry " + name);
  return *e;
}

inline std::vector<gidyn::CorpusEntry> all_corpus() { return gidyn::builtin_corpus(std::string(GIDYN_TEST_CORPUS_DIR)); }

/// Same-parameter SRG pairs, bundled and external.
inline std::vector<gidyn::CorpusEntry> srg_pairs() {
  std::vector<gidyn::CorpusEntry> out;
  for (auto& e : all_corpus())
    if (e.graphs.size() == 2 && gidyn::detect_srg(e.graphs[0])) out.push_back(e);
  return out;
}

/// Every strongly regular graph in the corpus.
inline std::vector<gidyn::Graph> srg_graphs() {
  std::vector<gidyn::Graph> out;
  for (auto& e : all_corpus())
    for (auto& g : e.graphs)
      if (gidyn::detect_srg(g)) out.push_back(g);
  return out;
}

}  // namespace testutil
