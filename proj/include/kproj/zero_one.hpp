#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kproj/matrix.hpp"

namespace kproj {

/// Square matrix with entries in {0, 1}, n <= 8. Row r is a bitmask whose most
/// significant of the n bits is column 0, so integer order on rows equals
/// lexicographic order on the row read left to right.
class ZeroOneMatrix {
 public:
  static constexpr std::size_t max_dimension = 8;

  ZeroOneMatrix() = default;
  /// All-zero n x n matrix.
  explicit ZeroOneMatrix(std::size_t n);
  ZeroOneMatrix(std::size_t n, std::vector<std::uint32_t> rows);

  /// Throws NotZeroOne for an entry outside {0, 1}, ShapeMismatch if ragged.
  static ZeroOneMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static ZeroOneMatrix identity(std::size_t n);
  /// Parses a row-major bitstring of length n*n.
  static ZeroOneMatrix from_bitstring(const std::string& bits);

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t r, std::size_t c) const { return (rows_[r] >> (n_ - 1 - c)) & 1U; }
  void set(std::size_t r, std::size_t c, bool v);
  const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }

  int row_sum(std::size_t r) const;
  int column_sum(std::size_t c) const;

  std::string bitstring() const;
  std::string to_text() const;

  /// |det| computed exactly over the integers.
  long long abs_determinant() const;
  bool is_nonsingular() const { return abs_determinant() != 0; }
  long long permanent() const;

  ZeroOneMatrix permuted(const std::vector<std::size_t>& row_perm,
                         const std::vector<std::size_t>& col_perm) const;

  template <Field T>
  Matrix<T> to_matrix() const {
    Matrix<T> m(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) m(r, c) = get(r, c) ? T(1) : T(0);
    return m;
  }

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;
  friend std::strong_ordering operator<=>(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> rows_;
};

}  // namespace kproj
