#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gidyn/graph.hpp"
#include "gidyn/latin_square.hpp"

namespace gidyn {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusEntry {
  std::string name;
  std::vector<Graph> graphs;  // one graph, or a same-order pair
  std::string provenance;
};

/// The two order-4 squares: the Klein-group table and the cyclic table.
std::array<LatinSquare, 2> latin_pair_order4();
/// The two order-5 squares: the cyclic table and a non-group square.
std::array<LatinSquare, 2> latin_pair_order5();

/// 3x3 rook's graph, vertices row-major.
Graph rook_graph_3x3();

/// Directory searched for the optional manifest: $GIDYN_CORPUS_DIR if set,
/// otherwise the path configured at build time.
std::string default_corpus_dir();

/// Entries constructed in code, followed by whatever the manifest in
/// `data_dir` lists. A missing directory or manifest is not an error.
std::vector<CorpusEntry> builtin_corpus(const std::optional<std::string>& data_dir = std::nullopt);

std::optional<CorpusEntry> find_corpus_entry(const std::string& name,
                                             const std::optional<std::string>& data_dir = std::nullopt);

/// Parses a manifest: one entry per line, `name file[,file] provenance...`,
/// `#` starts a comment. Files are resolved relative to `data_dir`.
std::vector<CorpusEntry> load_manifest(const std::string& data_dir);

}  // namespace gidyn
