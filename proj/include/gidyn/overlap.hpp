#pragma once

#include "gidyn/linalg.hpp"
#include "gidyn/multiset.hpp"
#include "gidyn/report.hpp"

namespace gidyn {

/// O_ij = <psi_i(0) | psi_j(T)> over a basis of localized initial states.
struct OverlapMatrix {
  ComplexMatrix entries;
  std::size_t size() const { return entries.rows(); }
};

/// Largest deviation of sum_j |O_ij|^2 from 1 over all rows.
double row_unitarity_error(const OverlapMatrix& o);

/// sum |Re o_(i) - Re o'_(i)| with both entry sets sorted by real part.
/// Throws std::invalid_argument on a dimension mismatch.
double r_metric(const OverlapMatrix& o1, const OverlapMatrix& o2);

/// sum |Im o_(i) - Im o'_(i)| with both entry sets sorted by imaginary part.
double i_metric(const OverlapMatrix& o1, const OverlapMatrix& o2);

/// Compares the two entry sets as complex multisets (lexicographic order,
/// real parts within `quantum` counted as tied) and fills in R and I.
/// Different dimensions give Distinguished without further work.
ComparisonReport overlap_compare(const OverlapMatrix& o1, const OverlapMatrix& o2, double tol = kDefaultCompareTol,
                                 double quantum = kDefaultQuantum);

}  // namespace gidyn
