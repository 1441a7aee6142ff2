#include <doctest.h>

#include <cmath>

#include "gidyn/classical.hpp"
#include "gidyn/graph_matrices.hpp"
#include "gidyn/srg_algebra.hpp"
#include "helpers.hpp"

using namespace gidyn;

namespace {

const std::vector<PotentialSpec> kPotentials{PotentialSpec::harmonic(), PotentialSpec::quartic(1, 1),
                                             PotentialSpec::saturating(), PotentialSpec::soft_saturating()};

double rel_close(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

AlgebraElement random_element(const SrgParams& p, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-2, 2);
  return {u(gen), u(gen), u(gen), p};
}

}  // namespace

TEST_CASE("SRG identities") {
  CHECK(verify_srg_identities(rook_graph_3x3(), {9, 4, 1, 2}).ok());
  for (const auto& g : testutil::corpus("L3-4-pair").graphs) CHECK(verify_srg_identities(g, {16, 9, 4, 6}).ok());
  const auto bad = verify_srg_identities(rook_graph_3x3(), {9, 4, 1, 3});
  CHECK_FALSE(bad.ok());
  CHECK(bad.violations.front().identity == "A^2");
  CHECK_THROWS_AS(verify_srg_identities(rook_graph_3x3(), {10, 4, 1, 2}), std::invalid_argument);
  for (const auto& g : testutil::srg_graphs()) CHECK(verify_srg_identities(g, *detect_srg(g)).ok());
}

TEST_CASE("product rule examples") {
  const SrgParams p{9, 4, 1, 2};
  const auto r = algebra_product({3, 0, 0, p}, {5, 0, 0, p});
  CHECK(r.f == 15);
  CHECK(r.g == 0);
  CHECK(r.h == 0);
  const auto jj = algebra_product({0, 1, 0, p}, {0, 1, 0, p});
  CHECK(jj.f == 0);
  CHECK(jj.g == 9);
  CHECK(jj.h == 0);
  const auto ll = algebra_product({0, 0, 1, p}, {0, 0, 1, p});
  CHECK(ll.f == -18);
  CHECK(ll.g == 2);
  CHECK(ll.h == 9);

  // The same coefficients from explicit 9x9 arithmetic.
  const auto l = laplacian(rook_graph_3x3()).matrix();
  const auto l2 = matmul(l, l);
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = 0; b < 9; ++b) CHECK(l2(a, b) == -18.0 * (a == b) + 2.0 + 9.0 * l(a, b));

  CHECK_THROWS_AS(algebra_product({1, 0, 0, p}, {1, 0, 0, {16, 9, 4, 6}}), std::invalid_argument);
}

TEST_CASE("commutativity and associativity") {
  auto gen = testutil::rng(51);
  for (const auto& g : testutil::srg_graphs()) {
    const auto p = *detect_srg(g);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_element(p, gen), b = random_element(p, gen), c = random_element(p, gen);
      const auto ab = algebra_product(a, b), ba = algebra_product(b, a);
      REQUIRE(rel_close(ab.f, ba.f) < 1e-9);
      REQUIRE(rel_close(ab.g, ba.g) < 1e-9);
      REQUIRE(rel_close(ab.h, ba.h) < 1e-9);
      const auto l = algebra_product(ab, c), r = algebra_product(a, algebra_product(b, c));
      REQUIRE(rel_close(l.f, r.f) < 1e-9);
      REQUIRE(rel_close(l.g, r.g) < 1e-9);
      REQUIRE(rel_close(l.h, r.h) < 1e-9);
    }
  }
}

TEST_CASE("faithfulness: matrix products match the product rule") {
  auto gen = testutil::rng(52);
  for (const auto& g : testutil::srg_graphs()) {
    const auto p = *detect_srg(g);
    for (int i = 0; i < 10; ++i) {
      const auto a = random_element(p, gen), b = random_element(p, gen);
      const auto direct = matmul(algebra_matrix(a, g), algebra_matrix(b, g));
      const auto predicted = algebra_matrix(algebra_product(a, b), g);
      const double scale = std::max(1.0, predicted.max_abs());
      for (std::size_t k = 0; k < direct.data().size(); ++k)
        REQUIRE(std::abs(direct.data()[k] - predicted.data()[k]) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("decomposition") {
  const auto g = rook_graph_3x3();
  const SrgParams p{9, 4, 1, 2};
  const auto id = decompose_in_algebra(SymmetricMatrix(Matrix::identity(9)), g, p);
  REQUIRE(id.element);
  CHECK(id.element->f == 1.0);
  CHECK(id.element->g == 0.0);
  CHECK(id.element->h == 0.0);

  const auto e = evolve_harmonic_closed_form(g, 1.0);
  const auto d = decompose_in_algebra(e.entries, g, p);
  REQUIRE(d.element);
  CHECK(d.residual < 1e-8 * e.entries.matrix().max_abs());

  auto gen = testutil::rng(53);
  for (int i = 0; i < 10; ++i) {
    const auto h = apply_permutation(g, testutil::random_permutation(9, gen));
    const auto dh = decompose_in_algebra(evolve_harmonic_closed_form(h, 1.0).entries, h, p);
    REQUIRE(dh.element);
    CHECK(rel_close(dh.element->f, d.element->f) < 1e-9);
    CHECK(rel_close(dh.element->g, d.element->g) < 1e-9);
    CHECK(rel_close(dh.element->h, d.element->h) < 1e-9);
  }

  // A path's adjacency has four distinct structural entries.
  const std::vector<std::pair<std::size_t, std::size_t>> path{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
  const auto not_in = decompose_in_algebra(adjacency_matrix(Graph::from_edges(9, path)), g, p);
  CHECK_FALSE(not_in.element);
}

TEST_CASE("predicted distance multiset") {
  const SrgParams p{16, 9, 4, 6};
  const auto trivial = predicted_distance_multiset({1, 0, 0, p});
  CHECK(trivial.multiplicities() == std::vector<std::size_t>{16, 240});
  CHECK(trivial.groups[1].value == 2.0);

  const auto l34 = testutil::corpus("L3-4-pair");
  std::vector<CanonicalMultiset> predicted;
  for (const auto& g : l34.graphs) {
    const auto s = evolve_harmonic_closed_form(g, 1.0);
    const auto d = decompose_in_algebra(s.entries, g, p);
    REQUIRE(d.element);
    const auto pred = predicted_distance_multiset(*d.element);
    const auto direct = squared_distances(s);
    const double scale = std::max(1.0, direct.values.back());
    CHECK(multiset_equal(pred, direct, 1e-8 * scale));
    predicted.push_back(pred);
  }
  CHECK(multiset_equal(predicted[0], predicted[1], 1e-8 * predicted[0].values.back()));
}

TEST_CASE("closure: every classical run on an SRG stays in the algebra") {
  for (const auto& g : testutil::srg_graphs()) {
    const auto p = *detect_srg(g);
    for (const auto& pot : kPotentials) {
      CAPTURE(pot.to_string());
      const IntegratorConfig cfg{1.0, pot.kind == PotentialKind::Quartic && p.k > 9 ? 0.05 : 0.1};
      const auto s = classical_gram(g, pot, cfg);
      const auto d = decompose_in_algebra(s.entries, g, p);
      REQUIRE(d.element);
      CHECK(d.residual < 1e-6 * s.entries.matrix().max_abs());
      const auto direct = squared_distances(s);
      const double scale = std::max(1.0, direct.values.back());
      CHECK(multiset_equal(predicted_distance_multiset(*d.element), direct, 1e-8 * scale));
    }
  }
}
