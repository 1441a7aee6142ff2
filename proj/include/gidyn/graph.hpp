#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gidyn {

/// Raised when textual graph input cannot be decoded.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph stored as a dense 0/1 adjacency matrix.
///
/// Vertices are 0-based in memory. Every file format and report uses 1-based
/// labels.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds from a 0-based edge list; duplicate edges are ignored.
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<std::size_t, std::size_t>> edges);

  /// Validates symmetry, zero diagonal and 0/1 entries.
  static Graph from_adjacency(std::size_t n, std::vector<std::uint8_t> adjacency);

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a * n_ + b] != 0; }
  std::size_t degree(std::size_t a) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> degrees() const;
  std::vector<std::size_t> neighbors(std::size_t a) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  const std::vector<std::uint8_t>& adjacency() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void set_edge(std::size_t a, std::size_t b);

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Bijection on {0, ..., n-1}; mapping[a] is the image of vertex a.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> mapping);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t a) const { return map_[a]; }
  const std::vector<std::size_t>& mapping() const { return map_; }
  Permutation inverse() const;

 private:
  std::vector<std::size_t> map_;
};

/// Relabels g so that result(p(a), p(b)) = g(a, b).
Graph apply_permutation(const Graph& g, const Permutation& p);

struct SrgParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;

  /// k(k - lambda - 1) == (n - k - 1) mu
  bool feasible() const;
  std::string to_string() const;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// (n, k, lambda, mu) when g is strongly regular. Complete and edgeless
/// graphs have no defined lambda or mu and yield nullopt.
std::optional<SrgParams> detect_srg(const Graph& g);

// Text formats.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

/// Reads every graph in a file. Edge-list files (first token "n") hold one
/// graph; graph6 files hold one graph per non-empty line.
std::vector<Graph> read_graph_file(const std::string& path);
std::vector<Graph> parse_graph_text(std::string_view text);

}  // namespace gidyn
