#include "gidyn/srg_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gidyn {

IdentityReport verify_srg_identities(const Graph& g, const SrgParams& p) {
  const std::size_t n = g.size();
  if (p.n != n)
    throw std::invalid_argument("parameter N=" + std::to_string(p.n) + " does not match graph order " +
                                std::to_string(n));
  const auto k = static_cast<long long>(p.k);
  const auto lambda = static_cast<long long>(p.lambda);
  const auto mu = static_cast<long long>(p.mu);
  const auto nn = static_cast<long long>(n);

  IdentityReport rep;
  auto check = [&](const char* id, std::size_t a, std::size_t b, long long expected, long long actual) {
    if (expected != actual) rep.violations.push_back({id, a, b, expected, actual});
  };

  std::vector<long long> row_sum(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) row_sum[a] += g.adjacent(a, c);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      long long a2 = 0;
      for (std::size_t c = 0; c < n; ++c) a2 += g.adjacent(a, c) && g.adjacent(c, b);
      const long long adj = g.adjacent(a, b) ? 1 : 0;
      const long long id = a == b ? 1 : 0;
      check("A^2", a, b, k * id + lambda * adj + mu * (1 - id - adj), a2);
      // (AJ)_ab is the row sum of a, (JA)_ab the column sum of b.
      check("AJ", a, b, k, row_sum[a]);
      check("JA", a, b, k, row_sum[b]);
      check("J^2", a, b, nn, nn);
    }
  }
  return rep;
}

AlgebraElement algebra_product(const AlgebraElement& r1, const AlgebraElement& r2) {
  if (!(r1.params == r2.params)) throw std::invalid_argument("algebra elements carry different SRG parameters");
  const auto& p = r1.params;
  const double n = static_cast<double>(p.n), k = static_cast<double>(p.k);
  const double lambda = static_cast<double>(p.lambda), mu = static_cast<double>(p.mu);
  const double hh = r1.h * r2.h;
  AlgebraElement out;
  out.params = p;
  out.f = r1.f * r2.f - (k * k - k * (lambda - mu + 1.0) + mu) * hh;
  out.g = r1.f * r2.g + r1.g * r2.f + n * r1.g * r2.g + mu * hh;
  out.h = r1.f * r2.h + r1.h * r2.f + (2.0 * k + mu - lambda) * hh;
  return out;
}

namespace {

double reconstruct(const AlgebraElement& e, const Graph& graph, std::size_t a, std::size_t b) {
  if (a == b) return e.f + e.g + e.h * static_cast<double>(e.params.k);
  return e.g - (graph.adjacent(a, b) ? e.h : 0.0);
}

}  // namespace

Matrix algebra_matrix(const AlgebraElement& e, const Graph& graph) {
  const std::size_t n = graph.size();
  Matrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a, b) = reconstruct(e, graph, a, b);
  return m;
}

Decomposition decompose_in_algebra(const SymmetricMatrix& m, const Graph& graph, const SrgParams& p,
                                   std::optional<double> tol) {
  const std::size_t n = graph.size();
  if (m.size() != n) throw std::invalid_argument("matrix and graph orders differ");
  const double limit = tol.value_or(1e-6 * m.matrix().max_abs());

  std::optional<std::pair<std::size_t, std::size_t>> edge, non_edge;
  for (std::size_t a = 0; a < n && !(edge && non_edge); ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto& slot = graph.adjacent(a, b) ? edge : non_edge;
      if (!slot) slot = {a, b};
    }

  Decomposition out;
  if (!edge || !non_edge || n == 0) {
    out.residual = std::numeric_limits<double>::infinity();
    return out;
  }
  AlgebraElement e;
  e.params = p;
  e.g = m(non_edge->first, non_edge->second);
  e.h = e.g - m(edge->first, edge->second);
  e.f = m(0, 0) - e.g - static_cast<double>(p.k) * e.h;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.residual = std::max(out.residual, std::abs(m(a, b) - reconstruct(e, graph, a, b)));
  if (out.residual <= limit) out.element = e;
  return out;
}

DistanceMultiset predicted_distance_multiset(const AlgebraElement& e, double quantum) {
  const std::size_t n = e.params.n, k = e.params.k;
  const double base = 2.0 * (e.f + static_cast<double>(k) * e.h);
  std::vector<double> values;
  values.reserve(n * n);
  values.insert(values.end(), n, 0.0);
  values.insert(values.end(), n * (n - k - 1), base);
  values.insert(values.end(), n * k, base + 2.0 * e.h);
  return canonical_multiset(std::move(values), quantum);
}

}  // namespace gidyn
