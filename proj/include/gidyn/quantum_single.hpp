#pragma once

#include "gidyn/graph.hpp"
#include "gidyn/overlap.hpp"

namespace gidyn {

inline constexpr double kDefaultWalkTime = 1.0;

/// Tight-binding Hamiltonian H = -A.
SymmetricMatrix walk_hamiltonian(const Graph& g);

/// O = exp(-i H T) in the vertex basis.
OverlapMatrix single_overlaps(const Graph& g, double total_time = kDefaultWalkTime);

ComparisonReport single_walk_compare(const Graph& g1, const Graph& g2, double total_time = kDefaultWalkTime,
                                     double tol = kDefaultCompareTol);

}  // namespace gidyn
