#include "gidyn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace gidyn {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::max_abs() const {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

double Matrix::frobenius() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* o = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) o[j] += aik * bk[j];
    }
  }
  return out;
}

Matrix matmul_transposed(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("matmul_transposed: shape mismatch");
  Matrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const double* bj = b.row(j);
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += ai[k] * bj[k];
      out(i, j) = s;
    }
  }
  return out;
}

SymmetricMatrix::SymmetricMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("symmetric matrix must be square");
  for (std::size_t r = 0; r < m_.rows(); ++r)
    for (std::size_t c = r + 1; c < m_.cols(); ++c) {
      const double v = 0.5 * (m_(r, c) + m_(c, r));
      m_(r, c) = v;
      m_(c, r) = v;
    }
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

EigenSystem sym_eig(const SymmetricMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("sym_eig: empty matrix");
  const Matrix& a = m.matrix();
  for (double v : a.data())
    if (!std::isfinite(v)) throw std::invalid_argument("sym_eig: non-finite matrix entry");

  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto idx = static_cast<Eigen::Index>(n);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Eigen::Map<const RowMajor>(a.data().data(), idx, idx));
  if (solver.info() != Eigen::Success) throw std::runtime_error("sym_eig: eigensolver did not converge");

  EigenSystem es{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    es.values[j] = solver.eigenvalues()(static_cast<Eigen::Index>(j));
    for (std::size_t r = 0; r < n; ++r)
      es.vectors(r, j) = solver.eigenvectors()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
  }
  return es;
}

EigenSystem sym_eig_jacobi(const SymmetricMatrix& m, const JacobiOptions& opts) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("sym_eig: empty matrix");
  for (double v : m.matrix().data())
    if (!std::isfinite(v)) throw std::invalid_argument("sym_eig: non-finite matrix entry");

  Matrix a = m.matrix();
  // Rows of vt are the eigenvectors; keeps every rotation on contiguous memory.
  Matrix vt = Matrix::identity(n);
  const double target = opts.relative_tolerance * a.frobenius();

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  bool converged = off_norm() <= target;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        double* rp = a.row(p);
        double* rq = a.row(q);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = rp[r], arq = rq[r];
          const double np = arp - s * (arq + tau * arp);
          const double nq = arq + s * (arp - tau * arq);
          rp[r] = np;
          rq[r] = nq;
          a(r, p) = np;
          a(r, q) = nq;
        }
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = 0.0;
        rq[p] = 0.0;

        double* vp = vt.row(p);
        double* vq = vt.row(q);
        for (std::size_t r = 0; r < n; ++r) {
          const double x = vp[r], y = vq[r];
          vp[r] = x - s * (y + tau * x);
          vq[r] = y + s * (x - tau * y);
        }
      }
    }
    converged = off_norm() <= target;
  }
  if (!converged) throw std::runtime_error("sym_eig: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenSystem es{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    es.values[j] = a(order[j], order[j]);
    const double* v = vt.row(order[j]);
    for (std::size_t r = 0; r < n; ++r) es.vectors(r, j) = v[r];
  }
  return es;
}

namespace {

// sum_k w_k v_k v_k^T over eigenpairs, filled symmetrically.
Matrix weighted_outer_sum(const EigenSystem& es, const std::vector<double>& w) {
  const std::size_t n = es.values.size();
  const Matrix vt = es.vectors.transpose();
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k] == 0.0) continue;
    const double* v = vt.row(k);
    for (std::size_t a = 0; a < n; ++a) {
      const double wa = w[k] * v[a];
      if (wa == 0.0) continue;
      double* o = out.row(a);
      for (std::size_t b = a; b < n; ++b) o[b] += wa * v[b];
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b) out(a, b) = out(b, a);
  return out;
}

}  // namespace

SymmetricMatrix sym_matrix_function(const EigenSystem& es, const std::function<double(double)>& f) {
  std::vector<double> w(es.values.size());
  std::transform(es.values.begin(), es.values.end(), w.begin(), f);
  return SymmetricMatrix(weighted_outer_sum(es, w));
}

SymmetricMatrix sym_matrix_function(const SymmetricMatrix& m, const std::function<double(double)>& f) {
  return sym_matrix_function(sym_eig(m), f);
}

ComplexMatrix unitary_evolution(const EigenSystem& es, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("unitary_evolution: non-finite time");
  const std::size_t n = es.values.size();
  std::vector<double> cs(n), sn(n);
  for (std::size_t k = 0; k < n; ++k) {
    cs[k] = std::cos(es.values[k] * t);
    sn[k] = -std::sin(es.values[k] * t);
  }
  const Matrix re = weighted_outer_sum(es, cs);
  const Matrix im = weighted_outer_sum(es, sn);
  ComplexMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out(a, b) = {re(a, b), im(a, b)};
  return out;
}

ComplexMatrix unitary_evolution(const SymmetricMatrix& m, double t) {
  return unitary_evolution(sym_eig(m), t);
}

}  // namespace gidyn
