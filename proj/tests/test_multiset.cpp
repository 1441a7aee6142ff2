#include <doctest.h>

#include <complex>

#include "gidyn/multiset.hpp"
#include "helpers.hpp"

using namespace gidyn;

TEST_CASE("canonical multiset sorting and grouping") {
  const auto m = canonical_multiset({3, 1, 2});
  CHECK(m.values == std::vector<double>{1, 2, 3});
  CHECK(m.multiplicities() == std::vector<std::size_t>{1, 1, 1});

  const auto tied = canonical_multiset({1.0, 1.0 + 1e-12});
  REQUIRE(tied.groups.size() == 1);
  CHECK(tied.groups[0].multiplicity == 2);
  CHECK(tied.groups[0].value == doctest::Approx(1.0 + 5e-13).epsilon(1e-15));

  CHECK(canonical_multiset({}).groups.empty());
  CHECK_THROWS_AS(canonical_multiset({1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("grouping chains neighbours within the quantum") {
  const auto m = canonical_multiset({0.0, 0.6e-9, 1.2e-9, 5.0});
  CHECK(m.multiplicities() == std::vector<std::size_t>{3, 1});
}

TEST_CASE("multiset equality") {
  auto gen = testutil::rng(6);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<double> v(50);
  for (auto& x : v) x = u(gen);
  const auto a = canonical_multiset(v);
  CHECK(multiset_equal(a, a));
  auto shuffled = v;
  std::shuffle(shuffled.begin(), shuffled.end(), gen);
  CHECK(multiset_equal(a, canonical_multiset(shuffled)));
  shuffled[0] += 1e-6;
  CHECK_FALSE(multiset_equal(a, canonical_multiset(shuffled)));
  shuffled.pop_back();
  CHECK_FALSE(multiset_equal(a, canonical_multiset(shuffled)));
}

TEST_CASE("complex canonical order") {
  using cd = std::complex<double>;
  const std::vector<cd> a{{1, 2}, {0, 5}, {1, -1}, {1 + 1e-12, 0}};
  const auto c = canonical_complex_order(a);
  CHECK(c[0] == cd(0, 5));
  CHECK(c[1] == cd(1, -1));
  CHECK(c[2] == cd(1 + 1e-12, 0));
  CHECK(c[3] == cd(1, 2));

  std::vector<cd> b(a.rbegin(), a.rend());
  CHECK(complex_multiset_distance(a, b) == 0.0);
  b[0] += cd(0, 1e-3);
  CHECK(complex_multiset_distance(a, b) == doctest::Approx(1e-3));
  b.pop_back();
  CHECK(std::isinf(complex_multiset_distance(a, b)));
}

TEST_CASE("sorted L1 distance") {
  CHECK(sorted_l1_distance({3, 1, 2}, {2, 3, 1}) == 0.0);
  CHECK(sorted_l1_distance({0, 1}, {0.5, 2}) == doctest::Approx(1.5));
  CHECK_THROWS_AS(sorted_l1_distance({1}, {1, 2}), std::invalid_argument);
}
