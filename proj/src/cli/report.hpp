#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "gidyn/graph.hpp"
#include "gidyn/multiset.hpp"
#include "gidyn/quantum_two.hpp"
#include "gidyn/report.hpp"

namespace gidyn::cli {

/// A graph together with the reference it was loaded from.
struct NamedGraph {
  std::string source;  // "corpus:NAME" or a file path
  std::size_t index = 1;  // 1-based position within the source
  Graph graph;
};

nlohmann::json multiset_json(const CanonicalMultiset& m);
nlohmann::json graph_json(const NamedGraph& g);
nlohmann::json comparison_json(const ComparisonReport& rep);
nlohmann::json srg_json(const Graph& g);

/// 12 significant digits, as used in the sweep CSV.
std::string format_csv_number(double v);
std::string sweep_csv(const std::vector<USweepPoint>& points);

}  // namespace gidyn::cli
