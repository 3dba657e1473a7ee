#include "kproj/zero_one.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace kproj {

ZeroOneMatrix::ZeroOneMatrix(std::size_t n) : ZeroOneMatrix(n, std::vector<std::uint32_t>(n, 0)) {}

ZeroOneMatrix::ZeroOneMatrix(std::size_t n, std::vector<std::uint32_t> rows) : n_(n), rows_(std::move(rows)) {
  if (n_ == 0 || n_ > max_dimension) throw ShapeMismatch("zero-one matrix size must be in [1, 8]");
  if (rows_.size() != n_) throw ShapeMismatch("zero-one matrix: wrong number of rows");
  for (auto r : rows_) {
    if (r >> n_) throw NotZeroOne("row bitmask wider than the matrix");
  }
}

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  ZeroOneMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw ShapeMismatch("zero-one matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1) {
        throw NotZeroOne("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is " +
                         std::to_string(rows[r][c]));
      }
      m.set(r, c, rows[r][c] == 1);
    }
  }
  return m;
}

ZeroOneMatrix ZeroOneMatrix::identity(std::size_t n) {
  ZeroOneMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

ZeroOneMatrix ZeroOneMatrix::from_bitstring(const std::string& bits) {
  std::size_t n = 0;
  while (n * n < bits.size()) ++n;
  if (n * n != bits.size()) throw ShapeMismatch("bitstring length is not a square");
  ZeroOneMatrix m(n);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1') throw NotZeroOne("bitstring contains '" + std::string(1, bits[k]) + "'");
    m.set(k / n, k % n, bits[k] == '1');
  }
  return m;
}

void ZeroOneMatrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint32_t bit = 1U << (n_ - 1 - c);
  rows_[r] = v ? (rows_[r] | bit) : (rows_[r] & ~bit);
}

int ZeroOneMatrix::row_sum(std::size_t r) const { return std::popcount(rows_[r]); }

int ZeroOneMatrix::column_sum(std::size_t c) const {
  int s = 0;
  for (std::size_t r = 0; r < n_; ++r) s += get(r, c) ? 1 : 0;
  return s;
}

std::string ZeroOneMatrix::bitstring() const {
  std::string s;
  s.reserve(n_ * n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) s.push_back(get(r, c) ? '1' : '0');
  return s;
}

std::string ZeroOneMatrix::to_text() const {
  std::string s;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) s.push_back(' ');
      s.push_back(get(r, c) ? '1' : '0');
    }
    s.push_back('\n');
  }
  return s;
}

long long ZeroOneMatrix::abs_determinant() const {
  // Bareiss over 64-bit integers; minors of a 0/1 matrix with n <= 8 stay tiny.
  std::vector<long long> a(n_ * n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) a[r * n_ + c] = get(r, c) ? 1 : 0;
  long long prev = 1;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t pivot = k;
    while (pivot < n_ && a[pivot * n_ + k] == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(a[pivot * n_ + c], a[k * n_ + c]);
    }
    for (std::size_t r = k + 1; r < n_; ++r) {
      for (std::size_t c = k + 1; c < n_; ++c) {
        a[r * n_ + c] = (a[k * n_ + k] * a[r * n_ + c] - a[r * n_ + k] * a[k * n_ + c]) / prev;
      }
      a[r * n_ + k] = 0;
    }
    prev = a[k * n_ + k];
  }
  const long long d = a[(n_ - 1) * n_ + (n_ - 1)];
  return d < 0 ? -d : d;
}

long long ZeroOneMatrix::permanent() const {
  // Ryser's formula over column subsets.
  long long total = 0;
  const std::uint32_t full = (1U << n_) - 1U;
  for (std::uint32_t subset = 1; subset <= full; ++subset) {
    long long prod = 1;
    for (std::size_t r = 0; r < n_ && prod != 0; ++r) prod *= std::popcount(rows_[r] & subset);
    const bool odd = ((n_ - static_cast<std::size_t>(std::popcount(subset))) & 1U) != 0;
    total += odd ? -prod : prod;
  }
  return total;
}

ZeroOneMatrix ZeroOneMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                      const std::vector<std::size_t>& col_perm) const {
  // Result(r, c) = this(row_perm[r], col_perm[c]).
  ZeroOneMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out.set(r, c, get(row_perm[r], col_perm[c]));
  return out;
}

}  // namespace kproj
