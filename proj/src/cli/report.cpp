#include "report.hpp"

#include <cmath>
#include <cstdio>

#include "gidyn/srg_algebra.hpp"

namespace gidyn::cli {

using nlohmann::json;

json multiset_json(const CanonicalMultiset& m) {
  json groups = json::array();
  for (const auto& g : m.groups) groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
  return {{"size", m.size()}, {"quantum", m.quantum}, {"groups", groups}};
}

json graph_json(const NamedGraph& g) {
  return {{"source", g.source}, {"index", g.index}, {"n", g.graph.size()}, {"graph6", encode_graph6(g.graph)}};
}

json comparison_json(const ComparisonReport& rep) {
  json j{{"verdict", to_string(rep.verdict)}, {"r_metric", rep.r_metric}, {"i_metric", rep.i_metric}};
  j["max_deviation"] = std::isfinite(rep.max_deviation) ? json(rep.max_deviation) : json(nullptr);
  json ms = json::array();
  for (const auto& m : rep.multisets) ms.push_back(multiset_json(m));
  j["multisets"] = ms;
  return j;
}

json srg_json(const Graph& g) {
  const auto p = detect_srg(g);
  if (!p) return {{"strongly_regular", false}};
  const auto rep = verify_srg_identities(g, *p);
  return {{"strongly_regular", true},
          {"parameters", {p->n, p->k, p->lambda, p->mu}},
          {"identities_ok", rep.ok()},
          {"violations", rep.violations.size()}};
}

std::string format_csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string sweep_csv(const std::vector<USweepPoint>& points) {
  std::string out = "u,R,I\n";
  for (const auto& p : points)
    out += format_csv_number(p.u) + "," + format_csv_number(p.r) + "," + format_csv_number(p.i) + "\n";
  return out;
}

}  // namespace gidyn::cli
