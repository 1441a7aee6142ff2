#include "gidyn/multiset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gidyn {

std::vector<std::size_t> CanonicalMultiset::multiplicities() const {
  std::vector<std::size_t> m;
  m.reserve(groups.size());
  for (const auto& g : groups) m.push_back(g.multiplicity);
  return m;
}

CanonicalMultiset canonical_multiset(std::vector<double> values, double quantum) {
  if (!(quantum > 0.0)) throw std::invalid_argument("canonical_multiset: quantum must be positive");
  std::sort(values.begin(), values.end());
  CanonicalMultiset out;
  out.quantum = quantum;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i < values.size() && values[i] - values[i - 1] <= quantum) continue;
    if (i > start) {
      double sum = 0.0;
      for (std::size_t j = start; j < i; ++j) sum += values[j];
      out.groups.push_back({sum / static_cast<double>(i - start), i - start});
    }
    start = i;
  }
  out.values = std::move(values);
  return out;
}

bool multiset_equal(const CanonicalMultiset& a, const CanonicalMultiset& b, double tol) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!(std::abs(a.values[i] - b.values[i]) <= tol)) return false;
  return true;
}

std::vector<std::complex<double>> canonical_complex_order(std::span<const std::complex<double>> values,
                                                          double quantum) {
  std::vector<std::complex<double>> out(values.begin(), values.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  });
  std::size_t start = 0;
  for (std::size_t i = 1; i <= out.size(); ++i) {
    if (i < out.size() && out[i].real() - out[i - 1].real() <= quantum) continue;
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.begin() + static_cast<std::ptrdiff_t>(i),
              [](const auto& x, const auto& y) {
                return x.imag() < y.imag() || (x.imag() == y.imag() && x.real() < y.real());
              });
    start = i;
  }
  return out;
}

double complex_multiset_distance(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
                                 double quantum) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const auto ca = canonical_complex_order(a, quantum);
  const auto cb = canonical_complex_order(b, quantum);
  double worst = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) worst = std::max(worst, std::abs(ca[i] - cb[i]));
  return worst;
}

double sorted_l1_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("sorted_l1_distance: size mismatch");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

}  // namespace gidyn
