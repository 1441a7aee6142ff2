#include "gidyn/quantum_two.hpp"

#include <cmath>
#include <limits>

namespace gidyn {

Statistics parse_statistics(const std::string& text) {
  if (text == "boson") return Statistics::Boson;
  if (text == "hcb") return Statistics::HardCoreBoson;
  if (text == "fermion") return Statistics::Fermion;
  throw std::invalid_argument("unknown statistics '" + text + "' (fermion, boson, hcb)");
}

std::string to_string(Statistics s) {
  switch (s) {
    case Statistics::Boson:
      return "boson";
    case Statistics::HardCoreBoson:
      return "hcb";
    case Statistics::Fermion:
      return "fermion";
  }
  return "?";
}

PairBasis pair_basis(std::size_t n, Statistics stats) {
  if (n < 2) throw std::invalid_argument("pair basis needs at least two vertices");
  PairBasis basis{stats, {}};
  const std::size_t offset = stats == Statistics::Boson ? 0 : 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + offset; j < n; ++j) basis.pairs.emplace_back(i, j);
  return basis;
}

KMatrix build_k_matrix(const Graph& g, Statistics stats, double hubbard_u) {
  if (!std::isfinite(hubbard_u) || hubbard_u < 0.0) throw std::invalid_argument("Hubbard U must be finite and >= 0");
  KMatrix k{pair_basis(g.size(), stats), stats == Statistics::Boson ? hubbard_u : 0.0, {}};
  const std::size_t dim = k.basis.size();
  SymmetricMatrix m(dim);
  auto adj = [&](std::size_t a, std::size_t b) { return g.adjacent(a, b) ? 1.0 : 0.0; };
  auto delta = [](std::size_t a, std::size_t b) { return a == b ? 1.0 : 0.0; };
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  for (std::size_t x = 0; x < dim; ++x) {
    const auto [i, j] = k.basis.pairs[x];
    for (std::size_t y = x; y < dim; ++y) {
      const auto [kk, l] = k.basis.pairs[y];
      const double exchange = delta(i, l) * adj(kk, j) + delta(j, kk) * adj(i, l);
      const double direct = delta(i, kk) * adj(j, l) + delta(j, l) * adj(i, kk);
      double value = 0.0;
      switch (stats) {
        case Statistics::Fermion:
          value = exchange - direct;
          break;
        case Statistics::HardCoreBoson:
          value = exchange + direct;
          break;
        case Statistics::Boson:
          if (i == j && kk == l) value = hubbard_u * delta(i, kk);
          else if (i == j || kk == l) value = inv_sqrt2 * (exchange + direct);
          else value = exchange + direct;
          break;
      }
      m.set(x, y, value);
    }
  }
  k.entries = std::move(m);
  return k;
}

OverlapMatrix two_particle_overlaps(const KMatrix& k, double total_time) {
  Matrix h = k.entries.matrix();
  h *= -1.0;
  return {unitary_evolution(SymmetricMatrix(std::move(h)), total_time)};
}

FermionSigns parse_fermion_signs(const std::string& text) {
  if (text == "symmetric") return FermionSigns::OrientationSymmetric;
  if (text == "literal") return FermionSigns::Literal;
  throw std::invalid_argument("unknown fermion sign mode '" + text + "' (symmetric, literal)");
}

std::string to_string(FermionSigns s) { return s == FermionSigns::Literal ? "literal" : "symmetric"; }

OverlapMatrix with_negated(const OverlapMatrix& o) {
  const auto& e = o.entries;
  ComplexMatrix out(2 * e.rows(), e.cols());
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = 0; c < e.cols(); ++c) {
      out(r, c) = e(r, c);
      out(r + e.rows(), c) = -e(r, c);
    }
  return {std::move(out)};
}

ComparisonReport two_particle_compare(const Graph& g1, const Graph& g2, Statistics stats, double hubbard_u,
                                      double total_time, double threshold, FermionSigns signs) {
  ComparisonReport rep;
  rep.method = "two-particle";
  if (g1.size() != g2.size()) {
    rep.verdict = Verdict::Distinguished;
    rep.max_deviation = std::numeric_limits<double>::infinity();
    return rep;
  }
  auto o1 = two_particle_overlaps(build_k_matrix(g1, stats, hubbard_u), total_time);
  auto o2 = two_particle_overlaps(build_k_matrix(g2, stats, hubbard_u), total_time);
  if (stats == Statistics::Fermion && signs == FermionSigns::OrientationSymmetric) {
    o1 = with_negated(o1);
    o2 = with_negated(o2);
  }
  rep.r_metric = r_metric(o1, o2);
  rep.i_metric = i_metric(o1, o2);
  rep.max_deviation = std::max(rep.r_metric, rep.i_metric);
  rep.verdict = rep.max_deviation > threshold ? Verdict::Distinguished : Verdict::NotDistinguished;
  return rep;
}

std::vector<USweepPoint> u_sweep(const Graph& g1, const Graph& g2, const std::vector<double>& u_values,
                                 double total_time) {
  std::vector<USweepPoint> out;
  out.reserve(u_values.size());
  for (double u : u_values) {
    const auto rep = two_particle_compare(g1, g2, Statistics::Boson, u, total_time);
    out.push_back({u, rep.r_metric, rep.i_metric});
  }
  return out;
}

}  // namespace gidyn
