#pragma once

#include <string>
#include <vector>

#include "gidyn/multiset.hpp"

namespace gidyn {

enum class Verdict { Distinguished, NotDistinguished };

inline const char* to_string(Verdict v) {
  return v == Verdict::Distinguished ? "Distinguished" : "NotDistinguished";
}

/// Outcome of comparing two graphs with one invariant.
///
/// For the quantum methods r_metric and i_metric are the sorted-real-part and
/// sorted-imaginary-part L1 distances between the two overlap matrices. The
/// classical method reports the sorted L1 distance of the squared-distance
/// multisets in r_metric and leaves i_metric at zero.
struct ComparisonReport {
  Verdict verdict = Verdict::NotDistinguished;
  double r_metric = 0.0;
  double i_metric = 0.0;
  /// Largest elementwise deviation between the canonicalized invariants.
  double max_deviation = 0.0;
  std::string method;
  std::vector<CanonicalMultiset> multisets;
};

}  // namespace gidyn
