#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gidyn/graph.hpp"
#include "gidyn/overlap.hpp"

namespace gidyn {

enum class Statistics { Boson, HardCoreBoson, Fermion };

/// "boson", "hcb" or "fermion".
Statistics parse_statistics(const std::string& text);
std::string to_string(Statistics s);

/// Two-particle occupation states |ij> in lexicographic order: i <= j for
/// soft-core bosons, i < j otherwise.
struct PairBasis {
  Statistics statistics = Statistics::Fermion;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t size() const { return pairs.size(); }
};

/// Throws std::invalid_argument for n < 2.
PairBasis pair_basis(std::size_t n, Statistics stats);

/// K = -<ij|H|kl> on the pair basis. `hubbard_u` only enters the soft-core
/// boson diagonal.
struct KMatrix {
  PairBasis basis;
  double hubbard_u = 0.0;
  SymmetricMatrix entries;
};

KMatrix build_k_matrix(const Graph& g, Statistics stats, double hubbard_u = 0.0);

/// O = exp(i K T), the forward evolution under H = -K.
OverlapMatrix two_particle_overlaps(const KMatrix& k, double total_time);

inline constexpr double kDefaultThreshold = 1e-6;

/// How fermion overlaps enter R and I. A relabeling can reverse a pair, and
/// |ji> = -|ij>, so entries on the i < j basis change sign under relabeling.
/// OrientationSymmetric compares every entry together with its negation (the
/// overlaps of all ordered pairs, each twice), which does not depend on vertex
/// labels. Literal compares the i < j entries as they are.
enum class FermionSigns { OrientationSymmetric, Literal };

FermionSigns parse_fermion_signs(const std::string& text);  // "symmetric" or "literal"
std::string to_string(FermionSigns s);

/// Rows of `o` followed by the rows of -o.
OverlapMatrix with_negated(const OverlapMatrix& o);

/// Distinguished iff max(R, I) > threshold, or the orders differ.
ComparisonReport two_particle_compare(const Graph& g1, const Graph& g2, Statistics stats, double hubbard_u,
                                      double total_time, double threshold = kDefaultThreshold,
                                      FermionSigns signs = FermionSigns::OrientationSymmetric);

struct USweepPoint {
  double u = 0.0;
  double r = 0.0;
  double i = 0.0;
};

/// Soft-core boson comparison at every u, output in input order.
std::vector<USweepPoint> u_sweep(const Graph& g1, const Graph& g2, const std::vector<double>& u_values,
                                 double total_time);

}  // namespace gidyn
