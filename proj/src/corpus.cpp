#include "gidyn/corpus.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef GIDYN_CORPUS_DIR
#define GIDYN_CORPUS_DIR "data/corpus"
#endif

namespace gidyn {
namespace fs = std::filesystem;

std::array<LatinSquare, 2> latin_pair_order4() {
  return {LatinSquare({{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}}),
          LatinSquare({{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 1, 2}, {4, 1, 2, 3}})};
}

std::array<LatinSquare, 2> latin_pair_order5() {
  return {LatinSquare({{1, 2, 3, 4, 5}, {2, 3, 4, 5, 1}, {3, 4, 5, 1, 2}, {4, 5, 1, 2, 3}, {5, 1, 2, 3, 4}}),
          LatinSquare({{1, 2, 3, 4, 5}, {2, 1, 4, 5, 3}, {3, 5, 1, 2, 4}, {4, 3, 5, 1, 2}, {5, 4, 2, 3, 1}})};
}

Graph rook_graph_3x3() {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = a + 1; b < 9; ++b)
      if (a / 3 == b / 3 || a % 3 == b % 3) edges.emplace_back(a, b);
  return Graph::from_edges(9, edges);
}

std::string default_corpus_dir() {
  if (const char* env = std::getenv("GIDYN_CORPUS_DIR"); env && *env) return env;
  return GIDYN_CORPUS_DIR;
}

std::vector<CorpusEntry> load_manifest(const std::string& data_dir) {
  const auto manifest = fs::path(data_dir) / "manifest";
  std::vector<CorpusEntry> out;
  if (!fs::exists(manifest)) return out;
  std::ifstream in(manifest);
  if (!in) throw CorpusError("cannot read corpus manifest " + manifest.string());

  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, files;
    if (!(fields >> name)) continue;
    if (!(fields >> files))
      throw CorpusError("corpus manifest line " + std::to_string(ln) + ": entry '" + name + "' lists no files");
    std::string provenance;
    std::getline(fields >> std::ws, provenance);

    CorpusEntry entry{name, {}, provenance};
    std::istringstream list(files);
    std::string file;
    while (std::getline(list, file, ',')) {
      try {
        for (auto& g : read_graph_file((fs::path(data_dir) / file).string())) entry.graphs.push_back(std::move(g));
      } catch (const std::exception& e) {
        throw CorpusError("corpus entry '" + name + "': " + e.what());
      }
    }
    if (entry.graphs.empty() || entry.graphs.size() > 2)
      throw CorpusError("corpus entry '" + name + "': expected one or two graphs, found " +
                        std::to_string(entry.graphs.size()));
    if (entry.graphs.size() == 2 && entry.graphs[0].size() != entry.graphs[1].size())
      throw CorpusError("corpus entry '" + name + "': paired graphs differ in order");
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CorpusEntry> builtin_corpus(const std::optional<std::string>& data_dir) {
  std::vector<CorpusEntry> out;
  {
    const std::pair<std::size_t, std::size_t> star[] = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
    const std::pair<std::size_t, std::size_t> cycle[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    out.push_back({"fig1-isospectral",
                   {Graph::from_edges(5, star), Graph::from_edges(5, cycle)},
                   "isospectral pair: star K1,4 and 4-cycle plus isolated vertex"});
  }
  out.push_back({"L2-3", {rook_graph_3x3()}, "3x3 rook's graph L2(3), SRG (9,4,1,2)"});
  {
    const auto sq = latin_pair_order4();
    out.push_back({"L3-4-pair",
                   {latin_square_graph(sq[0]), latin_square_graph(sq[1])},
                   "Latin square graphs of the order-4 Klein and cyclic squares, SRG (16,9,4,6)"});
  }
  {
    const auto sq = latin_pair_order5();
    out.push_back({"L3-5-pair",
                   {latin_square_graph(sq[0]), latin_square_graph(sq[1])},
                   "Latin square graphs of two inequivalent order-5 squares, SRG (25,12,5,6)"});
  }
  for (auto& e : load_manifest(data_dir.value_or(default_corpus_dir()))) out.push_back(std::move(e));
  return out;
}

std::optional<CorpusEntry> find_corpus_entry(const std::string& name, const std::optional<std::string>& data_dir) {
  for (auto& e : builtin_corpus(data_dir))
    if (e.name == name) return std::move(e);
  return std::nullopt;
}

}  // namespace gidyn
