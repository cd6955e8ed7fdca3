#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "manin/scalar.hpp"

namespace manin {

template <class S>
using Vec = std::vector<S>;

/// Small dense matrix over the scalar tower. Row-major, value-semantic.
/// All algebras here have dim <= 24, so no effort is spent on performance.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, ScalarTraits<S>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const S& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        const S& v = (*this)(r, k);
        if (ScalarTraits<S>::is_zero(v)) continue;
        for (int c = 0; c < o.cols_; ++c) p(r, c) += v * o(k, c);
      }
    return p;
  }

  Vec<S> operator*(const Vec<S>& x) const {
    if (int(x.size()) != cols_) throw std::invalid_argument("Mat: dimension mismatch in apply");
    Vec<S> y(rows_, ScalarTraits<S>::zero());
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }
  Mat operator*(const S& s) const {
    Mat r = *this;
    for (auto& v : r.a_) v = v * s;
    return r;
  }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  S max_abs() const {
    S m = ScalarTraits<S>::zero();
    for (const auto& v : a_) {
      S av = ScalarTraits<S>::abs(v);
      if (m < av) m = av;
    }
    return m;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

template <class S>
inline Vec<S> operator+(const Vec<S>& x, const Vec<S>& y) {
  Vec<S> r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}
template <class S>
inline Vec<S> operator-(const Vec<S>& x, const Vec<S>& y) {
  Vec<S> r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}
template <class S>
inline Vec<S> operator*(const S& s, const Vec<S>& x) {
  Vec<S> r(x);
  for (auto& v : r) v = s * v;
  return r;
}
template <class S>
inline Vec<S> operator-(const Vec<S>& x) {
  Vec<S> r(x);
  for (auto& v : r) v = -v;
  return r;
}

template <class S>
inline S max_abs(const Vec<S>& x) {
  S m = ScalarTraits<S>::zero();
  for (const auto& v : x) {
    S av = ScalarTraits<S>::abs(v);
    if (m < av) m = av;
  }
  return m;
}

template <class S>
inline Vec<S> basis_vector(int dim, int i) {
  Vec<S> v(dim, ScalarTraits<S>::zero());
  v[i] = ScalarTraits<S>::one();
  return v;
}

/// Gauss-Jordan elimination with pivoting; the workhorse for exact solves.
/// Returns the rank; on exit `m` is in reduced row echelon form and the same
/// row operations have been applied to `rhs` when given.
template <class S>
int row_reduce(Mat<S>& m, Mat<S>* rhs = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    if constexpr (ScalarTraits<S>::exact) {
      for (int r = rank; r < m.rows(); ++r)
        if (!ScalarTraits<S>::is_zero(m(r, col))) {
          pivot = r;
          break;
        }
    } else {
      S best = ScalarTraits<S>::zero();
      for (int r = rank; r < m.rows(); ++r) {
        S av = ScalarTraits<S>::abs(m(r, col));
        if (av > best) {
          best = av;
          pivot = r;
        }
      }
      if (pivot >= 0 && best < 1e-13) pivot = -1;
    }
    if (pivot < 0) continue;
    auto swap_rows = [&](Mat<S>& mm, int r1, int r2) {
      for (int c = 0; c < mm.cols(); ++c) std::swap(mm(r1, c), mm(r2, c));
    };
    if (pivot != rank) {
      swap_rows(m, pivot, rank);
      if (rhs) swap_rows(*rhs, pivot, rank);
    }
    S inv = ScalarTraits<S>::one() / m(rank, col);
    for (int c = 0; c < m.cols(); ++c) m(rank, c) = m(rank, c) * inv;
    if (rhs)
      for (int c = 0; c < rhs->cols(); ++c) (*rhs)(rank, c) = (*rhs)(rank, c) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || ScalarTraits<S>::is_zero(m(r, col))) continue;
      S f = m(r, col);
      for (int c = 0; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
      if (rhs)
        for (int c = 0; c < rhs->cols(); ++c) (*rhs)(r, c) -= f * (*rhs)(rank, c);
    }
    ++rank;
  }
  return rank;
}

template <class S>
int rank(Mat<S> m) {
  return row_reduce(m);
}

/// Solves m * x = rhs for square nondegenerate m.
template <class S>
Mat<S> solve(Mat<S> m, Mat<S> rhs) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve: square matrix required");
  int r = row_reduce(m, &rhs);
  if (r != m.rows()) throw std::domain_error("solve: singular matrix");
  return rhs;
}

template <class S>
Mat<S> inverse(const Mat<S>& m) {
  return solve(m, Mat<S>::identity(m.rows()));
}

template <class S>
S det(Mat<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
  S d = ScalarTraits<S>::one();
  int n = m.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!ScalarTraits<S>::is_zero(m(r, col))) {
        if constexpr (ScalarTraits<S>::exact) {
          pivot = r;
          break;
        } else {
          if (pivot < 0 || ScalarTraits<S>::abs(m(r, col)) > ScalarTraits<S>::abs(m(pivot, col))) pivot = r;
        }
      }
    if (pivot < 0) return ScalarTraits<S>::zero();
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      d = -d;
    }
    d = d * m(col, col);
    S inv = ScalarTraits<S>::one() / m(col, col);
    for (int r = col + 1; r < n; ++r) {
      S f = m(r, col) * inv;
      if (ScalarTraits<S>::is_zero(f)) continue;
      for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return d;
}

/// Basis of the null space, as columns.
template <class S>
Mat<S> kernel_basis(Mat<S> m) {
  int ncols = m.cols();
  int r = row_reduce(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(ncols, false);
  for (int row = 0, col = 0; row < r; ++row) {
    while (col < ncols && ScalarTraits<S>::is_zero(m(row, col))) ++col;
    if (col == ncols) break;
    pivot_col.push_back(col);
    is_pivot[col] = true;
  }
  Mat<S> k(ncols, ncols - r);
  int out = 0;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    k(free, out) = ScalarTraits<S>::one();
    for (int row = 0; row < int(pivot_col.size()); ++row) k(pivot_col[row], out) = -m(row, free);
    ++out;
  }
  return k;
}

inline Eigen::MatrixXd to_eigen(const Mat<double>& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

inline Mat<double> from_eigen(const Eigen::MatrixXd& e) {
  Mat<double> m(int(e.rows()), int(e.cols()));
  for (int r = 0; r < e.rows(); ++r)
    for (int c = 0; c < e.cols(); ++c) m(r, c) = e(r, c);
  return m;
}

template <class S>
Mat<double> to_float(const Mat<S>& m) {
  Mat<double> f(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) f(r, c) = ScalarTraits<S>::to_double(m(r, c));
  return f;
}

template <class S>
Vec<double> to_float(const Vec<S>& v) {
  Vec<double> f(v.size());
  for (size_t i = 0; i < v.size(); ++i) f[i] = ScalarTraits<S>::to_double(v[i]);
  return f;
}

}  // namespace manin
