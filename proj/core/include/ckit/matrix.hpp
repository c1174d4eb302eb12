#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "ckit/errors.hpp"
#include "ckit/scalar.hpp"

namespace ckit {

/// Dense matrix over an exact field F (Scalar, or the rational-function
/// field used by lattice certificates). All eliminations are exact; a pivot
/// is any nonzero entry, no magnitude heuristics.
template <class F>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<F>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c_)
        throw DomainError("Mat: ragged initializer");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& at(int i, int j) { return a_[i * c_ + j]; }
  const F& at(int i, int j) const { return a_[i * c_ + j]; }

  bool operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
  }
  Mat operator-() const {
    Mat m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw DomainError("Mat: shape mismatch in product");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const F& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.c_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          m.at(i, j) += x * o.at(k, j);
        }
      }
    return m;
  }
  Mat operator*(const F& s) const {
    Mat m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
    return m;
  }

  std::vector<F> apply(const std::vector<F>& x) const {
    if (static_cast<int>(x.size()) != c_)
      throw DomainError("Mat: vector size mismatch");
    std::vector<F> y(r_, F(0));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    return y;
  }

  Mat transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  F trace() const {
    if (r_ != c_) throw DomainError("Mat: trace of non-square matrix");
    F t(0);
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
  }

  std::vector<F> col(int j) const {
    std::vector<F> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
  }
  void set_col(int j, const std::vector<F>& v) {
    for (int i = 0; i < r_; ++i) at(i, j) = v[i];
  }

  int rank() const {
    Mat m = *this;
    return m.forward_eliminate();
  }

  F det() const {
    if (r_ != c_) throw DomainError("Mat: det of non-square matrix");
    Mat m = *this;
    F d(1);
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (!m.at(i, col).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return F(0);
      if (piv != col) {
        m.swap_rows(piv, col);
        d = -d;
      }
      d *= m.at(col, col);
      F inv = F(1) / m.at(col, col);
      for (int i = col + 1; i < r_; ++i) {
        if (m.at(i, col).is_zero()) continue;
        F f = m.at(i, col) * inv;
        for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
      }
    }
    return d;
  }

  std::optional<Mat> inverse() const {
    if (r_ != c_) throw DomainError("Mat: inverse of non-square matrix");
    Mat m = *this;
    Mat inv = identity(r_);
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (!m.at(i, col).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return std::nullopt;
      m.swap_rows(piv, col);
      inv.swap_rows(piv, col);
      F pinv = F(1) / m.at(col, col);
      m.scale_row(col, pinv);
      inv.scale_row(col, pinv);
      for (int i = 0; i < r_; ++i) {
        if (i == col || m.at(i, col).is_zero()) continue;
        F f = m.at(i, col);
        m.add_row(i, col, -f);
        inv.add_row(i, col, -f);
      }
    }
    return inv;
  }

  /// Unique solution of A x = b; nullopt when A is square-singular or the
  /// system is inconsistent / underdetermined.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    if (static_cast<int>(b.size()) != r_)
      throw DomainError("Mat: rhs size mismatch");
    Mat aug(r_, c_ + 1);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, c_) = b[i];
    }
    std::vector<int> pivot_col;
    aug.forward_eliminate(&pivot_col, c_);
    // Inconsistent if a pivot landed in the rhs column.
    for (int i = 0; i < r_; ++i) {
      bool lhs_zero = true;
      for (int j = 0; j < c_; ++j)
        if (!aug.at(i, j).is_zero()) lhs_zero = false;
      if (lhs_zero && !aug.at(i, c_).is_zero()) return std::nullopt;
    }
    if (static_cast<int>(pivot_col.size()) != c_) return std::nullopt;
    std::vector<F> x(c_, F(0));
    for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
      int pc = pivot_col[i];
      F v = aug.at(i, c_);
      for (int j = pc + 1; j < c_; ++j) v -= aug.at(i, j) * x[j];
      x[pc] = v / aug.at(i, pc);
    }
    return x;
  }

  /// Basis of the null space.
  std::vector<std::vector<F>> kernel() const {
    Mat m = *this;
    std::vector<int> pivot_col;
    m.forward_eliminate(&pivot_col);
    std::vector<bool> is_pivot(c_, false);
    for (int pc : pivot_col) is_pivot[pc] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < c_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(c_, F(0));
      v[free] = F(1);
      for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
        int pc = pivot_col[i];
        F s(0);
        for (int j = pc + 1; j < c_; ++j)
          if (!m.at(i, j).is_zero()) s += m.at(i, j) * v[j];
        v[pc] = -s / m.at(i, pc);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  int r_, c_;
  std::vector<F> a_;

  void check_same_shape(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DomainError("Mat: shape mismatch");
  }
  void swap_rows(int i, int j) {
    for (int k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
  }
  void scale_row(int i, const F& s) {
    for (int k = 0; k < c_; ++k) at(i, k) *= s;
  }
  void add_row(int i, int j, const F& s) {  // row_i += s * row_j
    for (int k = 0; k < c_; ++k)
      if (!at(j, k).is_zero()) at(i, k) += s * at(j, k);
  }

  // Row echelon form in place; returns rank. Pivot columns are searched in
  // [0, limit_cols). Records pivot columns when requested.
  int forward_eliminate(std::vector<int>* pivots = nullptr, int limit_cols = -1) {
    if (limit_cols < 0) limit_cols = c_;
    int row = 0;
    for (int col = 0; col < limit_cols && row < r_; ++col) {
      int piv = -1;
      for (int i = row; i < r_; ++i)
        if (!at(i, col).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      swap_rows(piv, row);
      F inv = F(1) / at(row, col);
      for (int i = row + 1; i < r_; ++i) {
        if (at(i, col).is_zero()) continue;
        F f = at(i, col) * inv;
        for (int j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
      }
      if (pivots) pivots->push_back(col);
      ++row;
    }
    return row;
  }
};

using SMat = Mat<Scalar>;
using SVec = std::vector<Scalar>;

inline SVec svec(int n) { return SVec(n, Scalar(0)); }

inline SVec operator+(const SVec& x, const SVec& y) {
  if (x.size() != y.size()) throw DomainError("vector size mismatch");
  SVec z(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[k] + y[k];
  return z;
}
inline SVec operator-(const SVec& x, const SVec& y) {
  if (x.size() != y.size()) throw DomainError("vector size mismatch");
  SVec z(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[k] - y[k];
  return z;
}
inline SVec operator*(const Scalar& s, const SVec& x) {
  SVec z(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) z[k] = s * x[k];
  return z;
}
inline bool vec_is_zero(const SVec& x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}
inline SVec unit_vec(int n, int j) {
  SVec v = svec(n);
  v[j] = Scalar(1);
  return v;
}

/// Matrix whose columns are the given vectors.
template <class F>
Mat<F> from_cols(const std::vector<std::vector<F>>& cols, int dim) {
  Mat<F> m(dim, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != dim)
      throw DomainError("from_cols: inconsistent vector dimension");
    for (int i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

}  // namespace ckit
