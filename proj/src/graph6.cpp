// graph6 (short form, n <= 62) and the hand-written edge-list format.

#include <charconv>
#include <fstream>
#include <sstream>

#include "gidyn/graph.hpp"

namespace gidyn {
namespace {

constexpr std::size_t kMaxGraph6Order = 62;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    lines.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_size(std::string_view tok, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw FormatError("graph6: empty input");

  const auto header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw FormatError("graph6: byte 0: long-form header (n > 62) is not supported");
  if (header < 63 || header > 126) throw FormatError("graph6: byte 0: invalid header byte");
  const std::size_t n = header - 63u;
  if (n > kMaxGraph6Order) throw FormatError("graph6: byte 0: order exceeds 62");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (text.size() < 1 + payload)
    throw FormatError("graph6: byte " + std::to_string(text.size()) + ": truncated payload, expected " +
                      std::to_string(payload) + " data bytes");
  if (text.size() > 1 + payload)
    throw FormatError("graph6: byte " + std::to_string(1 + payload) + ": trailing data after payload");

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t bit = 0;
  std::size_t i = 0, j = 1;
  for (std::size_t byte = 1; byte <= payload; ++byte) {
    const auto c = static_cast<unsigned char>(text[byte]);
    if (c < 63 || c > 126) throw FormatError("graph6: byte " + std::to_string(byte) + ": invalid data byte");
    const unsigned value = c - 63u;
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (value >> shift) & 1u;
      if (bit >= bits) {
        if (set) throw FormatError("graph6: byte " + std::to_string(byte) + ": nonzero padding bits");
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const auto n = g.size();
  if (n > kMaxGraph6Order) throw std::invalid_argument("graph6: order exceeds 62");
  std::string out(1, static_cast<char>(63 + n));
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = trim(lines[ln]);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    const auto where = "edge list line " + std::to_string(ln + 1) + ": ";
    const auto tok = tokens(line);
    if (!n) {
      std::size_t count = 0;
      if (tok.size() != 2 || tok[0] != "n" || !parse_size(tok[1], count) || count == 0)
        throw FormatError(where + "expected header 'n <count>'");
      n = count;
      continue;
    }
    std::size_t a = 0, b = 0;
    if (tok.size() != 2 || !parse_size(tok[0], a) || !parse_size(tok[1], b))
      throw FormatError(where + "expected two vertex indices");
    if (a < 1 || b < 1 || a > *n || b > *n)
      throw FormatError(where + "vertex index out of range 1.." + std::to_string(*n));
    if (a == b) throw FormatError(where + "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(a - 1, b - 1);
  }
  if (!n) throw FormatError("edge list: missing header 'n <count>'");
  return Graph::from_edges(*n, edges);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.size() << '\n';
  for (auto [a, b] : g.edges()) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

std::vector<Graph> parse_graph_text(std::string_view text) {
  const auto lines = split_lines(text);
  for (auto line : lines) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("n ") || line.starts_with("n\t")) return {parse_edge_list(text)};
    break;
  }
  std::vector<Graph> graphs;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const auto line = trim(lines[ln]);
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(ln + 1) + ": " + e.what());
    }
  }
  if (graphs.empty()) throw FormatError("no graphs found in input");
  return graphs;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_text(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace gidyn
