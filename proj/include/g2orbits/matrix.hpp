#pragma once

// Small dense kernels: a fixed 8x8 matrix for endomorphisms of the octonions
// and a heap-backed matrix for shape operators and coordinate systems.

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace g2orbits {

using Vec8 = std::array<double, 8>;

/// Real 8x8 matrix in row-major order. Column k is the image of e_k.
class Mat8 {
public:
  constexpr Mat8() = default;

  static constexpr Mat8 zero() { return Mat8{}; }

  static constexpr Mat8 identity() {
    Mat8 m;
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = 1.0;
    return m;
  }

  static Mat8 diagonal(const Vec8& d) {
    Mat8 m;
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr double& operator()(std::size_t r, std::size_t c) { return a_[r * 8 + c]; }
  constexpr double operator()(std::size_t r, std::size_t c) const { return a_[r * 8 + c]; }

  const std::array<double, 64>& data() const { return a_; }

  Mat8& operator+=(const Mat8& o) {
    for (std::size_t i = 0; i < 64; ++i) a_[i] += o.a_[i];
    return *this;
  }
  Mat8& operator-=(const Mat8& o) {
    for (std::size_t i = 0; i < 64; ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Mat8& operator*=(double s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend Mat8 operator+(Mat8 a, const Mat8& b) { return a += b; }
  friend Mat8 operator-(Mat8 a, const Mat8& b) { return a -= b; }
  friend Mat8 operator-(Mat8 a) { return a *= -1.0; }
  friend Mat8 operator*(Mat8 a, double s) { return a *= s; }
  friend Mat8 operator*(double s, Mat8 a) { return a *= s; }
  friend Mat8 operator/(Mat8 a, double s) { return a *= 1.0 / s; }

  friend Mat8 operator*(const Mat8& a, const Mat8& b) {
    Mat8 c;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t k = 0; k < 8; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < 8; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vec8 operator*(const Mat8& a, const Vec8& v) {
    Vec8 r{};
    for (std::size_t i = 0; i < 8; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < 8; ++k) s += a(i, k) * v[k];
      r[i] = s;
    }
    return r;
  }

  friend bool operator==(const Mat8&, const Mat8&) = default;

  Mat8 transpose() const {
    Mat8 t;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < 8; ++i) s += (*this)(i, i);
    return s;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

private:
  std::array<double, 64> a_{};
};

inline double max_abs_diff(const Mat8& a, const Mat8& b) { return (a - b).max_abs(); }

/// max |A^T A - I|
inline double orthogonality_defect(const Mat8& g) {
  return max_abs_diff(g.transpose() * g, Mat8::identity());
}

/// Determinant by Gaussian elimination with partial pivoting.
inline double determinant(const Mat8& m) {
  std::array<double, 64> a = m.data();
  double det = 1.0;
  for (std::size_t c = 0; c < 8; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < 8; ++r)
      if (std::abs(a[r * 8 + c]) > std::abs(a[p * 8 + c])) p = r;
    if (a[p * 8 + c] == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < 8; ++j) std::swap(a[p * 8 + j], a[c * 8 + j]);
      det = -det;
    }
    det *= a[c * 8 + c];
    for (std::size_t r = c + 1; r < 8; ++r) {
      const double f = a[r * 8 + c] / a[c * 8 + c];
      for (std::size_t j = c; j < 8; ++j) a[r * 8 + j] -= f * a[c * 8 + j];
    }
  }
  return det;
}

/// Row-major dynamic matrix.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return a_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return a_[r * cols_ + c];
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.cols_ == b.rows_);
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }

  friend DenseMatrix operator*(double s, DenseMatrix a) {
    for (auto& v : a.a_) v *= s;
    return a;
  }

  double trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  double frobenius_sq() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return s;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  /// max |A - A^T|; requires a square matrix.
  double asymmetry() const {
    assert(rows_ == cols_);
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

/// Determinant of a square dense matrix by partial-pivot elimination.
inline double determinant(DenseMatrix a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
    if (a(p, c) == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

} // namespace g2orbits
