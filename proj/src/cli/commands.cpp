#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>

#include "gidyn/classical.hpp"
#include "gidyn/cli.hpp"
#include "gidyn/corpus.hpp"
#include "gidyn/quantum_single.hpp"
#include "gidyn/quantum_two.hpp"
#include "gidyn/srg_algebra.hpp"
#include "report.hpp"

namespace gidyn::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::string> data_dir_of(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  return flag;
}

std::vector<NamedGraph> load_input(const std::string& ref, const std::optional<std::string>& data_dir) {
  std::vector<NamedGraph> out;
  if (ref.starts_with("corpus:")) {
    const auto name = ref.substr(7);
    auto entry = find_corpus_entry(name, data_dir);
    if (!entry) throw UsageError("unknown corpus entry '" + name + "'");
    for (std::size_t i = 0; i < entry->graphs.size(); ++i) out.push_back({ref, i + 1, std::move(entry->graphs[i])});
    return out;
  }
  auto graphs = read_graph_file(ref);
  for (std::size_t i = 0; i < graphs.size(); ++i) out.push_back({ref, i + 1, std::move(graphs[i])});
  return out;
}

std::vector<NamedGraph> load_inputs(const std::vector<std::string>& refs, const std::optional<std::string>& data_dir) {
  std::vector<NamedGraph> all;
  for (const auto& ref : refs)
    for (auto& g : load_input(ref, data_dir)) all.push_back(std::move(g));
  return all;
}

std::pair<NamedGraph, NamedGraph> load_pair(const std::vector<std::string>& refs,
                                            const std::optional<std::string>& data_dir) {
  auto all = load_inputs(refs, data_dir);
  if (all.size() != 2)
    throw UsageError("expected exactly two graphs across the inputs, found " + std::to_string(all.size()));
  return {std::move(all[0]), std::move(all[1])};
}

struct CompareOptions {
  std::vector<std::string> inputs;
  std::string method = "two-particle";
  std::string potential = "harmonic";
  std::string stats = "fermion";
  std::string fermion_signs = "symmetric";
  std::string normalize = "none";
  double u = 0.0;
  double total_time = 1.0;
  double dt = 0.1;
  double mobility = 1.0;
  double tol = kDefaultCompareTol;
  double quantum = kDefaultQuantum;
  double threshold = kDefaultThreshold;
  bool closed_form = false;
  bool exit_verdict = false;
};

int cmd_compare(const CompareOptions& o, const std::string& data_dir_flag, std::ostream& out) {
  const auto data_dir = data_dir_of(data_dir_flag);
  const auto [a, b] = load_pair(o.inputs, data_dir);
  const auto start = std::chrono::steady_clock::now();

  json params{{"method", o.method}, {"T", o.total_time}};
  ComparisonReport rep;
  if (o.method == "classical") {
    const auto pot = PotentialSpec::parse(o.potential);
    IntegratorConfig cfg{o.total_time, o.dt, o.mobility, parse_normalization(o.normalize), o.closed_form};
    params.update({{"potential", pot.to_string()},
                   {"dt", o.dt},
                   {"mobility", o.mobility},
                   {"normalize", o.normalize},
                   {"closed-form", o.closed_form},
                   {"tol", o.tol},
                   {"quantum", o.quantum}});
    rep = classical_compare(a.graph, b.graph, pot, cfg, o.tol, o.quantum);
  } else if (o.method == "walk1") {
    params.update({{"tol", o.tol}, {"quantum", o.quantum}});
    rep = a.graph.size() == b.graph.size()
              ? overlap_compare(single_overlaps(a.graph, o.total_time), single_overlaps(b.graph, o.total_time), o.tol,
                                o.quantum)
              : single_walk_compare(a.graph, b.graph, o.total_time, o.tol);
    rep.method = "walk1";
  } else if (o.method == "two-particle") {
    const auto stats = parse_statistics(o.stats);
    const auto signs = parse_fermion_signs(o.fermion_signs);
    params.update({{"stats", to_string(stats)}, {"U", o.u}, {"threshold", o.threshold}});
    if (stats == Statistics::Fermion) params["fermion-signs"] = to_string(signs);
    rep = two_particle_compare(a.graph, b.graph, stats, o.u, o.total_time, o.threshold, signs);
  } else {
    throw UsageError("unknown method '" + o.method + "' (classical, walk1, two-particle)");
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json report{{"command", "compare"}, {"parameters", params}, {"inputs", o.inputs}};
  if (data_dir) report["data-dir"] = *data_dir;
  report["graphs"] = {graph_json(a), graph_json(b)};
  report.update(comparison_json(rep));
  report["timing_ms"] = ms;
  out << report.dump(2) << '\n';
  if (o.exit_verdict && rep.verdict == Verdict::Distinguished) return kExitDistinguished;
  return kExitOk;
}

int cmd_verify_srg(const std::vector<std::string>& inputs, const std::string& format, const std::string& data_dir_flag,
                   std::ostream& out) {
  const auto graphs = load_inputs(inputs, data_dir_of(data_dir_flag));
  if (format == "json") {
    json arr = json::array();
    for (const auto& g : graphs) {
      auto j = graph_json(g);
      j.update(srg_json(g.graph));
      arr.push_back(j);
    }
    out << json{{"command", "verify-srg"}, {"graphs", arr}}.dump(2) << '\n';
    return kExitOk;
  }
  if (format != "text") throw UsageError("unknown format '" + format + "' (text, json)");
  for (const auto& g : graphs) {
    out << g.source << " [" << g.index << "]: ";
    const auto p = detect_srg(g.graph);
    if (!p) {
      out << "not strongly regular\n";
      continue;
    }
    const auto rep = verify_srg_identities(g.graph, *p);
    out << p->to_string() << ", identities " << (rep.ok() ? "ok" : "violated") << '\n';
    for (const auto& v : rep.violations)
      out << "  " << v.identity << " entry (" << v.row + 1 << ',' << v.col + 1 << "): expected " << v.expected
          << ", found " << v.actual << '\n';
  }
  return kExitOk;
}

struct SweepOptions {
  std::vector<std::string> inputs;
  double from = 0.0;
  double to = 2.0;
  std::size_t steps = 41;
  double total_time = 1.0;
};

int cmd_sweep_u(const SweepOptions& o, const std::string& data_dir_flag, std::ostream& out) {
  if (o.steps == 0) throw UsageError("--steps must be at least 1");
  if (!std::isfinite(o.from) || !std::isfinite(o.to) || o.from < 0.0 || o.to < 0.0)
    throw UsageError("--from and --to must be finite and non-negative");
  const auto [a, b] = load_pair(o.inputs, data_dir_of(data_dir_flag));
  std::vector<double> grid(o.steps);
  for (std::size_t i = 0; i < o.steps; ++i)
    grid[i] = o.steps == 1 ? o.from
                           : o.from + (o.to - o.from) * static_cast<double>(i) / static_cast<double>(o.steps - 1);
  out << sweep_csv(u_sweep(a.graph, b.graph, grid, o.total_time));
  return kExitOk;
}

std::string srg_summary(const Graph& g) {
  const auto p = detect_srg(g);
  return p ? p->to_string() : "-";
}

int cmd_corpus_list(const std::string& data_dir_flag, std::ostream& out) {
  for (const auto& e : builtin_corpus(data_dir_of(data_dir_flag))) {
    out << e.name << "\tn=" << e.graphs.front().size() << "\tgraphs=" << e.graphs.size() << "\tsrg=";
    for (std::size_t i = 0; i < e.graphs.size(); ++i) out << (i ? "," : "") << srg_summary(e.graphs[i]);
    out << '\t' << e.provenance << '\n';
  }
  return kExitOk;
}

int cmd_corpus_show(const std::string& name, const std::string& format, const std::string& data_dir_flag,
                    std::ostream& out) {
  const auto entry = find_corpus_entry(name, data_dir_of(data_dir_flag));
  if (!entry) throw UsageError("unknown corpus entry '" + name + "'");
  if (format == "g6") {
    for (const auto& g : entry->graphs) out << encode_graph6(g) << '\n';
  } else if (format == "edges") {
    for (const auto& g : entry->graphs) out << encode_edge_list(g);
  } else if (format == "json") {
    json graphs = json::array();
    for (std::size_t i = 0; i < entry->graphs.size(); ++i) {
      auto j = graph_json({"corpus:" + name, i + 1, entry->graphs[i]});
      j.update(srg_json(entry->graphs[i]));
      graphs.push_back(j);
    }
    out << json{{"name", entry->name}, {"provenance", entry->provenance}, {"graphs", graphs}}.dump(2) << '\n';
  } else {
    throw UsageError("unknown format '" + format + "' (g6, edges, json)");
  }
  return kExitOk;
}

int cmd_ingest(const std::vector<std::string>& inputs, const std::string& format, const std::string& data_dir_flag,
               std::ostream& out) {
  const auto graphs = load_inputs(inputs, data_dir_of(data_dir_flag));
  if (format == "g6") {
    for (const auto& g : graphs) out << encode_graph6(g.graph) << '\n';
  } else if (format == "edges") {
    for (const auto& g : graphs) out << encode_edge_list(g.graph);
  } else if (format == "json") {
    json arr = json::array();
    for (const auto& g : graphs) {
      auto j = graph_json(g);
      j["edges"] = g.graph.edge_count();
      j.update(srg_json(g.graph));
      arr.push_back(j);
    }
    out << json{{"command", "ingest"}, {"graphs", arr}}.dump(2) << '\n';
  } else {
    throw UsageError("unknown format '" + format + "' (g6, edges, json)");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph isomorphism screening with classical and quantum particle dynamics", "gidyn"};
  app.require_subcommand(1);
  std::string data_dir;
  app.add_option("--data-dir", data_dir, "Directory with the optional corpus manifest")->envname("GIDYN_CORPUS_DIR");

  CompareOptions co;
  auto* compare = app.add_subcommand("compare", "Compare two graphs with one invariant");
  compare->add_option("inputs", co.inputs, "Graph files or corpus:NAME references")->required();
  compare->add_option("--method", co.method, "classical | walk1 | two-particle")->capture_default_str();
  compare->add_option("--potential", co.potential, "harmonic | quartic:A,B | saturating | saturating-soft")
      ->capture_default_str();
  compare->add_option("--stats", co.stats, "fermion | boson | hcb")->capture_default_str();
  compare->add_option("--fermion-signs", co.fermion_signs,
                      "symmetric (relabeling-invariant) | literal (i<j entries as built)")
      ->capture_default_str();
  compare->add_option("--U", co.u, "Hubbard U for soft-core bosons")->capture_default_str();
  compare->add_option("--T", co.total_time, "Evolution time")->capture_default_str();
  compare->add_option("--dt", co.dt, "Euler step")->capture_default_str();
  compare->add_option("--mobility", co.mobility, "Mobility in mu dr/dt = F")->capture_default_str();
  compare->add_option("--normalize", co.normalize, "none | frobenius | row")->capture_default_str();
  compare->add_flag("--closed-form", co.closed_form, "Harmonic only: use exp(L T) instead of Euler steps");
  compare->add_option("--tol", co.tol, "Multiset comparison tolerance")->capture_default_str();
  compare->add_option("--quantum", co.quantum, "Multiset grouping quantum")->capture_default_str();
  compare->add_option("--threshold", co.threshold, "Two-particle threshold on max(R, I)")->capture_default_str();
  compare->add_flag("--exit-verdict", co.exit_verdict, "Exit 3 when Distinguished, 0 otherwise");

  std::vector<std::string> verify_inputs;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify-srg", "Detect SRG parameters and check the algebra identities");
  verify->add_option("inputs", verify_inputs, "Graph files or corpus:NAME references")->required();
  verify->add_option("--format", verify_format, "text | json")->capture_default_str();

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep-u", "Soft-core boson R and I over a grid of Hubbard U values (CSV)");
  sweep->add_option("inputs", so.inputs, "Graph files or corpus:NAME references")->required();
  sweep->add_option("--from", so.from, "First U")->capture_default_str();
  sweep->add_option("--to", so.to, "Last U")->capture_default_str();
  sweep->add_option("--steps", so.steps, "Number of grid points")->capture_default_str();
  sweep->add_option("--T", so.total_time, "Evolution time")->capture_default_str();

  auto* corpus = app.add_subcommand("corpus", "List or export corpus entries");
  corpus->add_subcommand("list", "List entries");
  std::string show_name, show_format = "g6";
  auto* show = corpus->add_subcommand("show", "Print one entry");
  show->add_option("name", show_name, "Entry name")->required();
  show->add_option("--format", show_format, "g6 | edges | json")->capture_default_str();

  std::vector<std::string> ingest_inputs;
  std::string ingest_format = "g6";
  auto* ingest = app.add_subcommand("ingest", "Read graph files and re-emit them in a canonical format");
  ingest->add_option("inputs", ingest_inputs, "Graph files or corpus:NAME references")->required();
  ingest->add_option("--format", ingest_format, "g6 | edges | json")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*compare) return cmd_compare(co, data_dir, out);
    if (*verify) return cmd_verify_srg(verify_inputs, verify_format, data_dir, out);
    if (*sweep) return cmd_sweep_u(so, data_dir, out);
    if (*ingest) return cmd_ingest(ingest_inputs, ingest_format, data_dir, out);
    if (*corpus) {
      if (*show) return cmd_corpus_show(show_name, show_format, data_dir, out);
      return cmd_corpus_list(data_dir, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace gidyn::cli
