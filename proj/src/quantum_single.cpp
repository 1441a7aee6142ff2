#include "gidyn/quantum_single.hpp"

#include <algorithm>
#include <cmath>
#include <limits>


namespace gidyn {

double row_unitarity_error(const OverlapMatrix& o) {
  double worst = 0.0;
  for (std::size_t i = 0; i < o.entries.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < o.entries.cols(); ++j) s += std::norm(o.entries(i, j));
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

namespace {

void require_same_shape(const OverlapMatrix& o1, const OverlapMatrix& o2) {
  if (o1.entries.rows() != o2.entries.rows() || o1.entries.cols() != o2.entries.cols())
    throw std::invalid_argument("overlap matrices differ in dimension");
}

template <class Part>
double sorted_part_distance(const OverlapMatrix& o1, const OverlapMatrix& o2, Part part) {
  require_same_shape(o1, o2);
  std::vector<double> a, b;
  a.reserve(o1.entries.data().size());
  b.reserve(o2.entries.data().size());
  for (const auto& z : o1.entries.data()) a.push_back(part(z));
  for (const auto& z : o2.entries.data()) b.push_back(part(z));
  return sorted_l1_distance(std::move(a), std::move(b));
}

}  // namespace

double r_metric(const OverlapMatrix& o1, const OverlapMatrix& o2) {
  return sorted_part_distance(o1, o2, [](const std::complex<double>& z) { return z.real(); });
}

double i_metric(const OverlapMatrix& o1, const OverlapMatrix& o2) {
  return sorted_part_distance(o1, o2, [](const std::complex<double>& z) { return z.imag(); });
}

ComparisonReport overlap_compare(const OverlapMatrix& o1, const OverlapMatrix& o2, double tol, double quantum) {
  ComparisonReport rep;
  rep.method = "overlap";
  if (o1.entries.rows() != o2.entries.rows() || o1.entries.cols() != o2.entries.cols()) {
    rep.verdict = Verdict::Distinguished;
    rep.max_deviation = std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.r_metric = r_metric(o1, o2);
  rep.i_metric = i_metric(o1, o2);
  rep.max_deviation = complex_multiset_distance(o1.entries.data(), o2.entries.data(), quantum);
  rep.verdict = rep.max_deviation > tol ? Verdict::Distinguished : Verdict::NotDistinguished;
  return rep;
}

SymmetricMatrix walk_hamiltonian(const Graph& g) {
  SymmetricMatrix h(g.size());
  for (auto [a, b] : g.edges()) h.set(a, b, -1.0);
  return h;
}

OverlapMatrix single_overlaps(const Graph& g, double total_time) {
  return {unitary_evolution(walk_hamiltonian(g), total_time)};
}

ComparisonReport single_walk_compare(const Graph& g1, const Graph& g2, double total_time, double tol) {
  if (g1.size() != g2.size()) {
    ComparisonReport rep;
    rep.method = "walk1";
    rep.verdict = Verdict::Distinguished;
    rep.max_deviation = std::numeric_limits<double>::infinity();
    return rep;
  }
  auto rep = overlap_compare(single_overlaps(g1, total_time), single_overlaps(g2, total_time), tol);
  rep.method = "walk1";
  return rep;
}

}  // namespace gidyn
