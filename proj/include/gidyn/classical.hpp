#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gidyn/graph.hpp"
#include "gidyn/linalg.hpp"
#include "gidyn/multiset.hpp"
#include "gidyn/report.hpp"

namespace gidyn {

/// Pairwise force laws for the relaxational particle dynamics. Particle a
/// sits at row a of the position matrix; r = r_a - r_b.
///
///  - Harmonic: edges push with +r, non-edges feel nothing (dX/dt = L X).
///  - Quartic: edges derive from -A r^2 + B r^4 with the fourth power taken
///    per coordinate, i.e. F_i = 2A r_i - 4B r_i^3; non-edges feel nothing.
///  - Saturating: edges push with r / (1 + |r|^3), non-edges pull with the
///    negation.
///  - SoftSaturating: as Saturating with denominator (1 + |r|^2)^(3/2).
enum class PotentialKind { Harmonic, Quartic, Saturating, SoftSaturating };

struct PotentialSpec {
  PotentialKind kind = PotentialKind::Harmonic;
  double quartic_a = 1.0;
  double quartic_b = 1.0;

  static PotentialSpec harmonic() { return {}; }
  static PotentialSpec quartic(double a, double b);
  static PotentialSpec saturating() { return {PotentialKind::Saturating, 0.0, 0.0}; }
  static PotentialSpec soft_saturating() { return {PotentialKind::SoftSaturating, 0.0, 0.0}; }

  /// "harmonic", "quartic:A,B", "saturating" or "saturating-soft".
  static PotentialSpec parse(const std::string& text);
  std::string to_string() const;
};

/// FrobeniusUnit scales X to unit Frobenius norm; RowUnit scales every
/// particle's position vector to unit length.
enum class Normalization { None, FrobeniusUnit, RowUnit };

Normalization parse_normalization(const std::string& text);
std::string to_string(Normalization n);

struct IntegratorConfig {
  double total_time = 1.0;
  double step = 0.1;
  double mobility = 1.0;
  Normalization normalization = Normalization::None;
  /// Harmonic only: use X = exp(L T) instead of Euler steps.
  bool closed_form = false;

  /// Number of Euler steps; throws std::invalid_argument when the fields are
  /// out of range or step does not divide total_time.
  std::size_t step_count() const;
};

/// Raised when a coordinate leaves the finite range during integration.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::size_t step, const std::string& what) : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

inline constexpr double kDivergenceLimit = 1e150;

struct PositionMatrix {
  Matrix coords;  // row a = position of particle a
};

struct GramMatrix {
  SymmetricMatrix entries;  // S = X X^T
};

using DistanceMultiset = CanonicalMultiset;

/// S = exp(2 L T), unnormalized.
GramMatrix evolve_harmonic_closed_form(const Graph& g, double total_time);

/// First-order Euler from X(0) = I: X <- X + (step / mobility) F(X).
PositionMatrix euler_integrate(const Graph& g, const PotentialSpec& pot, const IntegratorConfig& cfg);

GramMatrix gram(const PositionMatrix& x);

/// Applies cfg.normalization to a Gram matrix, as if it had been applied to X.
GramMatrix normalize_gram(const GramMatrix& s, Normalization mode);

/// Full pipeline: integrate (or use the harmonic closed form), normalize,
/// form S.
GramMatrix classical_gram(const Graph& g, const PotentialSpec& pot, const IntegratorConfig& cfg);

/// All n^2 values S_aa + S_bb - 2 S_ab, diagonal zeros included.
DistanceMultiset squared_distances(const GramMatrix& s, double quantum = kDefaultQuantum);

/// Runs the pipeline on both graphs and compares the squared-distance
/// multisets. Grouping quantum and tolerance are relative: both are scaled by
/// max(1, largest |d^2|), since unnormalized runs can reach very large
/// magnitudes where absolute thresholds are meaningless.
ComparisonReport classical_compare(const Graph& g1, const Graph& g2, const PotentialSpec& pot,
                                   const IntegratorConfig& cfg, double tol = kDefaultCompareTol,
                                   double quantum = kDefaultQuantum);

}  // namespace gidyn
