#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gidyn/graph.hpp"

namespace gidyn {

enum class IsoOutcome { Isomorphic, NonIsomorphic, TooLarge };

struct IsoVerdict {
  IsoOutcome outcome = IsoOutcome::NonIsomorphic;
  /// Set when outcome is Isomorphic: apply_permutation(g1, *witness) == g2.
  std::optional<Permutation> witness;
};

inline constexpr std::size_t kDefaultBruteForceMaxOrder = 10;

/// Stable colour refinement run on both graphs with a shared palette, so
/// colours are comparable across the pair. Returns one colour vector per graph.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(const Graph& g1, const Graph& g2);

/// Exhaustive isomorphism search, pruned by colour refinement. Ground truth
/// for small graphs only.
IsoVerdict brute_force_isomorphic(const Graph& g1, const Graph& g2,
                                  std::size_t max_n = kDefaultBruteForceMaxOrder);

}  // namespace gidyn
