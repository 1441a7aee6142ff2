#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gidyn {

inline constexpr double kDefaultQuantum = 1e-9;
inline constexpr double kDefaultCompareTol = 1e-8;

/// Sorted real values with run-grouping: neighbours within `quantum` of each
/// other share a group whose representative is the group mean.
struct CanonicalMultiset {
  struct Group {
    double value = 0.0;
    std::size_t multiplicity = 0;
  };

  std::vector<double> values;
  double quantum = kDefaultQuantum;
  std::vector<Group> groups;

  std::size_t size() const { return values.size(); }
  std::vector<std::size_t> multiplicities() const;
};

CanonicalMultiset canonical_multiset(std::vector<double> values, double quantum = kDefaultQuantum);

/// Same length and |a_i - b_i| <= tol elementwise after sorting.
bool multiset_equal(const CanonicalMultiset& a, const CanonicalMultiset& b, double tol = kDefaultCompareTol);

/// Complex entries sorted by real part, with real parts within `quantum`
/// treated as tied and ordered by imaginary part.
std::vector<std::complex<double>> canonical_complex_order(std::span<const std::complex<double>> values,
                                                          double quantum = kDefaultQuantum);

/// Largest |a_i - b_i| between the canonical orders of two complex
/// multisets; infinity when the sizes differ.
double complex_multiset_distance(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b,
                                 double quantum = kDefaultQuantum);

/// sum_i |a_(i) - b_(i)| over the independently sorted sequences.
double sorted_l1_distance(std::vector<double> a, std::vector<double> b);

}  // namespace gidyn
