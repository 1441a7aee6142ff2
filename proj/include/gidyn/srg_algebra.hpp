#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gidyn/classical.hpp"
#include "gidyn/graph.hpp"
#include "gidyn/linalg.hpp"

namespace gidyn {

/// f I + g J + h L in the three-dimensional algebra spanned by the identity,
/// the all-ones matrix and the Laplacian of a strongly regular graph.
struct AlgebraElement {
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
  SrgParams params;
};

struct IdentityViolation {
  std::string identity;  // "A^2", "AJ", "JA" or "J^2"
  std::size_t row = 0;   // 0-based
  std::size_t col = 0;
  long long expected = 0;
  long long actual = 0;
};

struct IdentityReport {
  std::vector<IdentityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks A^2 = kI + lambda A + mu (J - I - A), AJ = JA = kJ and J^2 = NJ
/// entrywise in exact integer arithmetic. Throws std::invalid_argument when
/// p.n differs from the graph order; wrong k, lambda or mu show up as
/// violations.
IdentityReport verify_srg_identities(const Graph& g, const SrgParams& p);

/// Product rule of the algebra; throws std::invalid_argument when the two
/// elements carry different parameters.
AlgebraElement algebra_product(const AlgebraElement& r1, const AlgebraElement& r2);

/// f I + g J + h L as a dense matrix, L taken from `graph`.
Matrix algebra_matrix(const AlgebraElement& e, const Graph& graph);

struct Decomposition {
  std::optional<AlgebraElement> element;  // empty: not in the algebra
  double residual = 0.0;                  // largest |m - (fI + gJ + hL)| entry
};

/// Reads (f, g, h) off the first diagonal entry, the lexicographically first
/// edge and the first non-edge, then validates every entry against the
/// reconstruction. The default tolerance is 1e-6 |m|_max.
Decomposition decompose_in_algebra(const SymmetricMatrix& m, const Graph& graph, const SrgParams& p,
                                   std::optional<double> tol = std::nullopt);

/// {0 x N, 2(f + kh) x N(N - k - 1), 2(f + kh) + 2h x Nk}.
DistanceMultiset predicted_distance_multiset(const AlgebraElement& e, double quantum = kDefaultQuantum);

}  // namespace gidyn
