#ifndef ESSBP_MATRIX_HPP
#define ESSBP_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace essbp {

/// Dense row-major matrix. Small and allocation-transparent; this project
/// only needs dense storage for reference operators and test assembly.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }
  double* row(int i) { return a_.data() + std::size_t(i) * cols_; }
  const double* row(int i) const { return a_.data() + std::size_t(i) * cols_; }

  void fill(double v) { a_.assign(a_.size(), v); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

/// Compensated (Kahan) accumulator. Entropy-functional differences in the
/// relaxation solve sit ~14 digits below the summands, so plain summation
/// order noise would poison the root find.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

inline Matrix identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

/// Kronecker product a (x) b.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const double v = a(ia, ja);
      if (v == 0.0) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          c(ia * b.rows() + ib, ja * b.cols() + jb) = v * b(ib, jb);
    }
  return c;
}

}  // namespace essbp

#endif
