#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace gidyn {

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }
  const std::vector<double>& data() const { return data_; }

  double max_abs() const;
  double frobenius() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
/// a * b^T without forming the transpose.
Matrix matmul_transposed(const Matrix& a, const Matrix& b);

/// Real symmetric matrix; construction averages (a,b) and (b,a) so the
/// stored entries are exactly symmetric.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(Matrix m);
  explicit SymmetricMatrix(std::size_t n) : m_(n, n) {}

  std::size_t size() const { return m_.rows(); }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  void set(std::size_t r, std::size_t c, double v) {
    m_(r, c) = v;
    m_(c, r) = v;
  }
  const Matrix& matrix() const { return m_; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  Matrix m_;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<value_type>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conjugate_transpose(const ComplexMatrix& a);

struct EigenSystem {
  std::vector<double> values;  // non-decreasing
  Matrix vectors;              // column j belongs to values[j]
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;  // off-diagonal Frobenius norm vs |M|_F
  int max_sweeps = 100;
};

/// Householder tridiagonalization plus implicit QL (Eigen's self-adjoint
/// solver). Single-threaded and deterministic. Throws std::invalid_argument
/// on an empty matrix or a non-finite entry.
EigenSystem sym_eig(const SymmetricMatrix& m);

/// Cyclic Jacobi with a fixed (p, q) sweep order. Slower and less robust on
/// large, highly degenerate spectra; kept as an independent reference.
/// Throws std::runtime_error when the sweep budget runs out.
EigenSystem sym_eig_jacobi(const SymmetricMatrix& m, const JacobiOptions& opts = {});

/// V diag(f(values)) V^T.
SymmetricMatrix sym_matrix_function(const EigenSystem& es, const std::function<double(double)>& f);
SymmetricMatrix sym_matrix_function(const SymmetricMatrix& m, const std::function<double(double)>& f);

/// exp(-i m t) = V diag(exp(-i values t)) V^T.
ComplexMatrix unitary_evolution(const EigenSystem& es, double t);
ComplexMatrix unitary_evolution(const SymmetricMatrix& m, double t);

}  // namespace gidyn
