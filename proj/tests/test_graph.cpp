#include <doctest.h>

#include <set>

#include "gidyn/corpus.hpp"
#include "gidyn/graph.hpp"
#include "helpers.hpp"

using namespace gidyn;

namespace {

// Independent graph6 reader: expand the payload into a bit string first, then
// walk the upper triangle column by column.
std::set<std::pair<std::size_t, std::size_t>> reference_graph6_edges(const std::string& code, std::size_t& n) {
  n = static_cast<std::size_t>(code.at(0) - 63);
  std::string bits;
  for (std::size_t i = 1; i < code.size(); ++i) {
    const int v = code[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((v >> b) & 1) ? '1' : '0');
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if (bits.at(k) == '1') edges.insert({i, j});
  return edges;
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

Graph star() {
  const std::vector<std::pair<std::size_t, std::size_t>> e{{0, 4}, {1, 4}, {2, 4}, {3, 4}};
  return Graph::from_edges(5, e);
}

Graph cycle_plus_isolated() {
  const std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return Graph::from_edges(5, e);
}

}  // namespace

TEST_CASE("graph6 decoding agrees with a reference decoder") {
  std::size_t n = 0;
  const auto ref = reference_graph6_edges("D?{", n);
  const auto g = parse_graph6("D?{");
  CHECK(g.size() == n);
  CHECK(edge_set(g) == ref);
  CHECK(g.size() == 5);
  CHECK(g.edge_count() == 4);
}

TEST_CASE("graph6 smallest and malformed codes") {
  const auto g = parse_graph6("@");
  CHECK(g.size() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(encode_graph6(g) == "@");

  CHECK_THROWS_AS(parse_graph6("D?"), FormatError);      // payload one byte short
  CHECK_THROWS_AS(parse_graph6("D?{?"), FormatError);    // one byte too many
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("D?\x7f"), FormatError);  // byte outside 63..126
  CHECK_THROWS_AS(parse_graph6("A@"), FormatError);      // nonzero padding bit for n = 2
  CHECK_NOTHROW(parse_graph6(">>graph6<<D?{"));
}

TEST_CASE("graph6 round trip and reference agreement on random graphs") {
  auto gen = testutil::rng(11);
  std::uniform_int_distribution<std::size_t> order(1, 40);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = testutil::random_graph(order(gen), density(gen), gen);
    const auto code = encode_graph6(g);
    REQUIRE(parse_graph6(code) == g);
    std::size_t n = 0;
    REQUIRE(reference_graph6_edges(code, n) == edge_set(g));
    REQUIRE(n == g.size());
  }
}

TEST_CASE("edge lists") {
  const auto g = parse_edge_list("n 5\n1 5\n2 5\n3 5\n4 5");
  CHECK(g == star());
  CHECK(g.degrees() == std::vector<std::size_t>{1, 1, 1, 1, 4});

  const auto h = parse_edge_list("n 5\n1 2\n2 3\n3 4\n4 1");
  CHECK(h == cycle_plus_isolated());
  CHECK(parse_edge_list(encode_edge_list(h)) == h);

  try {
    parse_edge_list("n 3\n1 1");
    FAIL("self-loop accepted");
  } catch (const FormatError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("self-loop") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("n 3\n1 4"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n1"), FormatError);
  CHECK(parse_edge_list("# comment\nn 3\n\n1 2 # trailing\n").edge_count() == 1);
}

TEST_CASE("mixed text dispatch") {
  CHECK(parse_graph_text("n 2\n1 2\n").size() == 1);
  const auto many = parse_graph_text("D?{\n@\n\n");
  REQUIRE(many.size() == 2);
  CHECK(many[1].size() == 1);
  CHECK_THROWS_WITH_AS(parse_graph_text("D?{\nD?\n"), doctest::Contains("line 2"), FormatError);
}

TEST_CASE("graph construction validates input") {
  const std::vector<std::pair<std::size_t, std::size_t>> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
  const std::vector<std::pair<std::size_t, std::size_t>> out_of_range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, out_of_range), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_adjacency(2, {0, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_adjacency(2, {1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("permutations") {
  auto gen = testutil::rng(5);
  const auto g = testutil::random_graph(12, 0.4, gen);
  CHECK(apply_permutation(g, Permutation::identity(12)) == g);

  CHECK(apply_permutation(star(), Permutation({1, 0, 2, 3, 4})) == star());
  CHECK(apply_permutation(cycle_plus_isolated(), Permutation({1, 2, 3, 0, 4})) == cycle_plus_isolated());

  // Result equals P A P^T with P(p(a), a) = 1.
  const auto p = testutil::random_permutation(12, gen);
  const auto h = apply_permutation(g, p);
  for (std::size_t r = 0; r < 12; ++r)
    for (std::size_t c = 0; c < 12; ++c) {
      int sum = 0;
      for (std::size_t a = 0; a < 12; ++a)
        for (std::size_t b = 0; b < 12; ++b)
          sum += (p(a) == r) * g.adjacent(a, b) * (p(b) == c);
      REQUIRE(h.adjacent(r, c) == (sum == 1));
    }
  CHECK(apply_permutation(h, p.inverse()) == g);
  CHECK_THROWS_AS(apply_permutation(g, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("SRG detection") {
  CHECK(detect_srg(rook_graph_3x3()) == SrgParams{9, 4, 1, 2});
  CHECK_FALSE(detect_srg(star()));
  CHECK_FALSE(detect_srg(Graph(4)));
  const auto l34 = testutil::corpus("L3-4-pair");
  for (const auto& g : l34.graphs) CHECK(detect_srg(g) == SrgParams{16, 9, 4, 6});
  const auto l35 = testutil::corpus("L3-5-pair");
  for (const auto& g : l35.graphs) CHECK(detect_srg(g) == SrgParams{25, 12, 5, 6});
}

TEST_CASE("SRG parameters are feasible and relabeling-invariant") {
  auto gen = testutil::rng(17);
  for (const auto& g : testutil::srg_graphs()) {
    const auto p = detect_srg(g);
    REQUIRE(p);
    CHECK(p->k * (p->k - p->lambda - 1) == (p->n - p->k - 1) * p->mu);
    CHECK(p->feasible());
    for (int i = 0; i < 100; ++i) REQUIRE(detect_srg(apply_permutation(g, testutil::random_permutation(g.size(), gen))) == p);
  }
}
