#include "gidyn/classical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gidyn/graph_matrices.hpp"

namespace gidyn {
namespace {

std::vector<double> squared_distance_values(const GramMatrix& s) {
  const auto& m = s.entries;
  const std::size_t n = m.size();
  std::vector<double> out;
  out.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.push_back(a == b ? 0.0 : m(a, a) + m(b, b) - 2.0 * m(a, b));
  return out;
}

Matrix forces(const Graph& g, const Matrix& x, const PotentialSpec& pot, const Matrix& lap) {
  const std::size_t n = g.size();
  if (pot.kind == PotentialKind::Harmonic) return matmul(lap, x);

  Matrix f(n, x.cols());
  std::vector<double> r(x.cols());
  for (std::size_t a = 0; a < n; ++a) {
    double* fa = f.row(a);
    const double* xa = x.row(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const bool edge = g.adjacent(a, b);
      const double* xb = x.row(b);
      switch (pot.kind) {
        case PotentialKind::Quartic:
          if (!edge) break;
          for (std::size_t i = 0; i < x.cols(); ++i) {
            const double d = xa[i] - xb[i];
            fa[i] += 2.0 * pot.quartic_a * d - 4.0 * pot.quartic_b * d * d * d;
          }
          break;
        case PotentialKind::Saturating:
        case PotentialKind::SoftSaturating: {
          double d2 = 0.0;
          for (std::size_t i = 0; i < x.cols(); ++i) {
            r[i] = xa[i] - xb[i];
            d2 += r[i] * r[i];
          }
          const double denom = pot.kind == PotentialKind::Saturating ? 1.0 + d2 * std::sqrt(d2)
                                                                     : std::pow(1.0 + d2, 1.5);
          const double w = (edge ? 1.0 : -1.0) / denom;
          for (std::size_t i = 0; i < x.cols(); ++i) fa[i] += w * r[i];
          break;
        }
        case PotentialKind::Harmonic:
          break;
      }
    }
  }
  return f;
}

}  // namespace

PotentialSpec PotentialSpec::quartic(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || b < 0.0)
    throw std::invalid_argument("quartic potential needs finite A and B >= 0");
  return {PotentialKind::Quartic, a, b};
}

PotentialSpec PotentialSpec::parse(const std::string& text) {
  if (text == "harmonic") return harmonic();
  if (text == "saturating") return saturating();
  if (text == "saturating-soft") return soft_saturating();
  if (text == "quartic") return quartic(1.0, 1.0);
  if (text.starts_with("quartic:")) {
    std::istringstream in(text.substr(8));
    double a = 0.0, b = 0.0;
    char comma = 0;
    if (in >> a >> comma >> b && comma == ',' && (in >> std::ws).eof()) return quartic(a, b);
  }
  throw std::invalid_argument("unknown potential '" + text + "' (harmonic, quartic:A,B, saturating, saturating-soft)");
}

std::string PotentialSpec::to_string() const {
  switch (kind) {
    case PotentialKind::Harmonic:
      return "harmonic";
    case PotentialKind::Saturating:
      return "saturating";
    case PotentialKind::SoftSaturating:
      return "saturating-soft";
    case PotentialKind::Quartic: {
      std::ostringstream os;
      os.precision(17);
      os << "quartic:" << quartic_a << ',' << quartic_b;
      return os.str();
    }
  }
  return "?";
}

Normalization parse_normalization(const std::string& text) {
  if (text == "none") return Normalization::None;
  if (text == "frobenius") return Normalization::FrobeniusUnit;
  if (text == "row") return Normalization::RowUnit;
  throw std::invalid_argument("unknown normalization '" + text + "' (none, frobenius, row)");
}

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::None:
      return "none";
    case Normalization::FrobeniusUnit:
      return "frobenius";
    case Normalization::RowUnit:
      return "row";
  }
  return "?";
}

std::size_t IntegratorConfig::step_count() const {
  if (!(std::isfinite(total_time) && total_time > 0.0)) throw std::invalid_argument("total time must be positive");
  if (!(std::isfinite(step) && step > 0.0 && step <= total_time))
    throw std::invalid_argument("step must lie in (0, total time]");
  if (!(std::isfinite(mobility) && mobility > 0.0)) throw std::invalid_argument("mobility must be positive");
  const double ratio = total_time / step;
  const double steps = std::round(ratio);
  if (std::abs(steps * step - total_time) > 1e-12 * std::max(1.0, total_time))
    throw std::invalid_argument("step does not divide total time");
  return static_cast<std::size_t>(steps);
}

GramMatrix evolve_harmonic_closed_form(const Graph& g, double total_time) {
  if (!std::isfinite(total_time)) throw std::invalid_argument("total time must be finite");
  return {sym_matrix_function(laplacian(g), [total_time](double x) { return std::exp(2.0 * x * total_time); })};
}

PositionMatrix euler_integrate(const Graph& g, const PotentialSpec& pot, const IntegratorConfig& cfg) {
  const std::size_t steps = cfg.step_count();
  const std::size_t n = g.size();
  const Matrix lap = laplacian(g).matrix();
  const double scale = cfg.step / cfg.mobility;
  Matrix x = Matrix::identity(n);
  for (std::size_t s = 1; s <= steps; ++s) {
    x += forces(g, x, pot, lap) * scale;
    for (double v : x.data())
      if (!std::isfinite(v) || std::abs(v) > kDivergenceLimit)
        throw DivergenceError(s, "integration diverged at step " + std::to_string(s));
  }

  if (cfg.normalization == Normalization::FrobeniusUnit) {
    const double norm = x.frobenius();
    if (norm > 0.0) x *= 1.0 / norm;
  } else if (cfg.normalization == Normalization::RowUnit) {
    for (std::size_t a = 0; a < n; ++a) {
      double* row = x.row(a);
      double s2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) s2 += row[i] * row[i];
      if (s2 == 0.0) continue;
      const double inv = 1.0 / std::sqrt(s2);
      for (std::size_t i = 0; i < n; ++i) row[i] *= inv;
    }
  }
  return {std::move(x)};
}

GramMatrix gram(const PositionMatrix& x) { return {SymmetricMatrix(matmul_transposed(x.coords, x.coords))}; }

GramMatrix normalize_gram(const GramMatrix& s, Normalization mode) {
  const auto& m = s.entries;
  const std::size_t n = m.size();
  if (mode == Normalization::None) return s;
  Matrix out = m.matrix();
  if (mode == Normalization::FrobeniusUnit) {
    double trace = 0.0;
    for (std::size_t a = 0; a < n; ++a) trace += m(a, a);
    if (trace > 0.0) out *= 1.0 / trace;
  } else {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const double da = m(a, a), db = m(b, b);
        if (da > 0.0 && db > 0.0) out(a, b) = m(a, b) / std::sqrt(da * db);
      }
  }
  return {SymmetricMatrix(std::move(out))};
}

GramMatrix classical_gram(const Graph& g, const PotentialSpec& pot, const IntegratorConfig& cfg) {
  if (cfg.closed_form) {
    if (pot.kind != PotentialKind::Harmonic)
      throw std::invalid_argument("closed-form evolution exists only for the harmonic potential");
    return normalize_gram(evolve_harmonic_closed_form(g, cfg.total_time), cfg.normalization);
  }
  return gram(euler_integrate(g, pot, cfg));
}

DistanceMultiset squared_distances(const GramMatrix& s, double quantum) {
  return canonical_multiset(squared_distance_values(s), quantum);
}

ComparisonReport classical_compare(const Graph& g1, const Graph& g2, const PotentialSpec& pot,
                                   const IntegratorConfig& cfg, double tol, double quantum) {
  ComparisonReport rep;
  rep.method = "classical";
  if (g1.size() != g2.size()) {
    rep.verdict = Verdict::Distinguished;
    return rep;
  }
  const auto d1 = squared_distance_values(classical_gram(g1, pot, cfg));
  const auto d2 = squared_distance_values(classical_gram(g2, pot, cfg));
  double scale = 1.0;
  for (double v : d1) scale = std::max(scale, std::abs(v));
  for (double v : d2) scale = std::max(scale, std::abs(v));

  rep.multisets.push_back(canonical_multiset(d1, quantum * scale));
  rep.multisets.push_back(canonical_multiset(d2, quantum * scale));
  const auto& a = rep.multisets[0].values;
  const auto& b = rep.multisets[1].values;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double dev = std::abs(a[i] - b[i]);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    rep.r_metric += dev;
  }
  rep.verdict = multiset_equal(rep.multisets[0], rep.multisets[1], tol * scale) ? Verdict::NotDistinguished
                                                                                 : Verdict::Distinguished;
  return rep;
}

}  // namespace gidyn
