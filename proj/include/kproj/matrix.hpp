#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "kproj/errors.hpp"
#include "kproj/scalar.hpp"

namespace kproj {

/// Dense row-major matrix over one of the scalar backends.
template <Field T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw ShapeMismatch("matrix data does not match its shape");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Convenience for literals in tests and examples.
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeMismatch("ragged matrix literal");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = from_int<T>(v);
      ++i;
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T>& data() noexcept { return data_; }
  const std::vector<T>& data() const noexcept { return data_; }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  // Zero entries of the left factor are skipped; the kron-with-identity
  // operators used throughout are mostly zeros.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        T* dst = &out.data_[i * b.cols_];
        const T* src = &b.data_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!is_zero(src[j])) dst[j] += x * src[j];
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Field T>
bool is_zero_matrix(const Matrix<T>& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const T& x) { return is_zero(x); });
}

/// Exact equality on the exact backend, max-norm within epsilon() on floats.
template <Field T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    if (!is_zero(T(a.data()[i] - b.data()[i]))) return false;
  }
  return true;
}

/// First (row, col) in row-major order where the two matrices differ.
template <Field T>
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix<T>& a,
                                                                    const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix shapes differ");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!is_zero(T(a(r, c) - b(r, c)))) return std::pair{r, c};
    }
  }
  return std::nullopt;
}

template <Field T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

template <Field T>
T trace(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeMismatch("trace of a non-square matrix");
  T t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Standard tensor-product matrix; row index (ra, rb), column index (ca, cb).
template <Field T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const T& x = a(ra, ca);
      if (is_zero(x)) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb) {
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
          const T& y = b(rb, cb);
          if (is_zero(y)) continue;
          out(ra * b.rows() + rb, ca * b.cols() + cb) = x * y;
        }
      }
    }
  }
  return out;
}

/// Block-diagonal direct sum.
template <Field T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

/// m^power by repeated squaring; power 0 gives the identity.
template <Field T>
Matrix<T> power(Matrix<T> m, unsigned long long exponent) {
  if (!m.is_square()) throw ShapeMismatch("power of a non-square matrix");
  Matrix<T> result = Matrix<T>::identity(m.rows());
  while (exponent > 0) {
    if (exponent & 1ULL) result = result * m;
    exponent >>= 1ULL;
    if (exponent > 0) m = m * m;
  }
  return result;
}

/// Gauss-Jordan inverse; nullopt when singular.
template <Field T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    double best = 0.0;
    for (std::size_t r = col; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const double mag = magnitude(a(r, col));
      if (pivot == n || mag > best) {
        pivot = r;
        best = mag;
        if constexpr (backend_of<T> == Backend::exact) break;
      }
    }
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const T scale = T(1) / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const T f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

/// Exact rank by fraction-free elimination.
std::size_t rank(const Matrix<Rational>& m);
/// Number of singular values above epsilon().
std::size_t rank(const Matrix<Complex>& m);

template <Field T>
bool is_idempotent(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeMismatch("idempotency of a non-square matrix");
  return approx_equal(m * m, m);
}

/// Incrementally maintained reduced row-echelon basis of a subspace of T^dim.
template <Field T>
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  std::size_t ambient_dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == dim_; }
  const std::vector<std::vector<T>>& vectors() const noexcept { return rows_; }

  /// Reduces v against the basis; the residual is zero iff v is in the span.
  std::vector<T> reduce(std::vector<T> v) const {
    if (v.size() != dim_) throw ShapeMismatch("span basis: vector length");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T f = v[pivots_[k]];
      if (is_zero(f)) continue;
      for (std::size_t c = 0; c < dim_; ++c) v[c] -= f * rows_[k][c];
    }
    return v;
  }

  bool contains(const std::vector<T>& v) const {
    const auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const T& x) { return is_zero(x); });
  }

  /// Adds v; returns true when it enlarged the span.
  bool insert(std::vector<T> v) {
    v = reduce(std::move(v));
    std::size_t pivot = dim_;
    double best = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (is_zero(v[c])) continue;
      const double mag = magnitude(v[c]);
      if (pivot == dim_ || mag > best) {
        pivot = c;
        best = mag;
        if constexpr (backend_of<T> == Backend::exact) break;
      }
    }
    if (pivot == dim_) return false;
    const T scale = T(1) / v[pivot];
    for (auto& x : v) x *= scale;
    for (auto& row : rows_) {
      const T f = row[pivot];
      if (is_zero(f)) continue;
      for (std::size_t c = 0; c < dim_; ++c) row[c] -= f * v[c];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

template <Field T>
std::vector<T> column(const Matrix<T>& m, std::size_t c) {
  std::vector<T> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

/// A basis of the column space, as a list of column vectors.
template <Field T>
std::vector<std::vector<T>> column_space(const Matrix<T>& m) {
  SpanBasis<T> span(m.rows());
  std::vector<std::vector<T>> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto v = column(m, c);
    if (span.insert(v)) basis.push_back(std::move(v));
  }
  return basis;
}

/// Row-major flattening, used to test linear independence of matrices.
template <Field T>
std::vector<T> flatten(const Matrix<T>& m) {
  return m.data();
}

}  // namespace kproj
