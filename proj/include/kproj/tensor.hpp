#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "kproj/errors.hpp"
#include "kproj/scalar.hpp"

namespace kproj {

inline constexpr std::size_t max_tensor_rank = 4;

/// Dense tensor of rank 1..4, entries in row-major index order.
template <Field T>
class Tensor {
 public:
  using Index = std::vector<std::size_t>;

  Tensor() = default;
  explicit Tensor(Index shape) : shape_(std::move(shape)) {
    if (shape_.empty() || shape_.size() > max_tensor_rank) {
      throw ShapeMismatch("tensor rank must be between 1 and 4");
    }
    for (auto d : shape_) {
      if (d == 0) throw ShapeMismatch("tensor dimensions must be positive");
    }
    data_.assign(count(shape_), T(0));
  }
  Tensor(Index shape, std::vector<T> data) : Tensor(std::move(shape)) {
    if (data.size() != data_.size()) throw ShapeMismatch("tensor data does not match its shape");
    data_ = std::move(data);
  }

  static Tensor cube(std::size_t n) { return Tensor({n, n, n}); }

  const Index& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  bool is_cubic() const noexcept {
    return rank() == 3 && shape_[0] == shape_[1] && shape_[1] == shape_[2];
  }

  template <class... I>
  T& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  const T& at(const Index& idx) const { return data_[offset(idx)]; }
  T& at(const Index& idx) { return data_[offset(idx)]; }

  std::size_t offset(const Index& idx) const {
    if (idx.size() != shape_.size()) throw ShapeMismatch("tensor index has wrong rank");
    std::size_t off = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (idx[a] >= shape_[a]) throw ShapeMismatch("tensor index out of range");
      off = off * shape_[a] + idx[a];
    }
    return off;
  }

  Index unravel(std::size_t off) const {
    Index idx(shape_.size());
    for (std::size_t a = shape_.size(); a-- > 0;) {
      idx[a] = off % shape_[a];
      off /= shape_[a];
    }
    return idx;
  }

  Tensor& operator+=(const Tensor& o) {
    if (shape_ != o.shape_) throw ShapeMismatch("tensor shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator*(const T& s, Tensor a) { return a *= s; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

  static std::size_t count(const Index& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
  }

 private:
  Index shape_;
  std::vector<T> data_;
};

template <Field T>
bool approx_equal(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.shape() != b.shape()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(T(a.data()[i] - b.data()[i]))) return false;
  }
  return true;
}

/// Sums over the paired axes (axis of a, axis of b). The remaining axes of a
/// come first, then those of b, each in their original order.
template <Field T>
Tensor<T> contract(const Tensor<T>& a, const Tensor<T>& b,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<bool> a_paired(a.rank(), false), b_paired(b.rank(), false);
  for (auto [pa, pb] : pairs) {
    if (pa >= a.rank() || pb >= b.rank()) throw ShapeMismatch("contract: axis out of range");
    if (a_paired[pa] || b_paired[pb]) throw ShapeMismatch("contract: axis paired twice");
    if (a.shape()[pa] != b.shape()[pb]) throw ShapeMismatch("contract: paired axes differ in size");
    a_paired[pa] = b_paired[pb] = true;
  }
  std::vector<std::size_t> a_free, b_free;
  typename Tensor<T>::Index out_shape;
  for (std::size_t ax = 0; ax < a.rank(); ++ax)
    if (!a_paired[ax]) a_free.push_back(ax), out_shape.push_back(a.shape()[ax]);
  for (std::size_t ax = 0; ax < b.rank(); ++ax)
    if (!b_paired[ax]) b_free.push_back(ax), out_shape.push_back(b.shape()[ax]);

  typename Tensor<T>::Index sum_shape;
  for (auto [pa, pb] : pairs) sum_shape.push_back(a.shape()[pa]);

  // A full contraction yields a scalar, stored as a rank-1 tensor of size 1.
  Tensor<T> out(out_shape.empty() ? typename Tensor<T>::Index{1} : out_shape);
  const std::size_t sum_count = Tensor<T>::count(sum_shape);

  typename Tensor<T>::Index ia(a.rank()), ib(b.rank()), is(pairs.size());
  for (std::size_t o = 0; o < out.size(); ++o) {
    if (!out_shape.empty()) {
      const auto io = out.unravel(o);
      for (std::size_t k = 0; k < a_free.size(); ++k) ia[a_free[k]] = io[k];
      for (std::size_t k = 0; k < b_free.size(); ++k) ib[b_free[k]] = io[a_free.size() + k];
    }
    T acc(0);
    for (std::size_t s = 0; s < sum_count; ++s) {
      std::size_t rem = s;
      for (std::size_t k = pairs.size(); k-- > 0;) {
        is[k] = rem % sum_shape[k];
        rem /= sum_shape[k];
      }
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        ia[pairs[k].first] = is[k];
        ib[pairs[k].second] = is[k];
      }
      const T& x = a.at(ia);
      if (is_zero(x)) continue;
      const T& y = b.at(ib);
      if (is_zero(y)) continue;
      acc += x * y;
    }
    out.data()[o] = acc;
  }
  return out;
}

/// Reorders axes: axis k of the result is axis order[k] of the input.
template <Field T>
Tensor<T> permute(const Tensor<T>& t, const std::vector<std::size_t>& order) {
  if (order.size() != t.rank()) throw ShapeMismatch("permute: wrong number of axes");
  typename Tensor<T>::Index shape(order.size());
  std::vector<bool> used(order.size(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= t.rank() || used[order[k]]) throw ShapeMismatch("permute: not a permutation");
    used[order[k]] = true;
    shape[k] = t.shape()[order[k]];
  }
  Tensor<T> out(shape);
  typename Tensor<T>::Index src(t.rank());
  for (std::size_t o = 0; o < out.size(); ++o) {
    const auto idx = out.unravel(o);
    for (std::size_t k = 0; k < order.size(); ++k) src[order[k]] = idx[k];
    out.data()[o] = t.at(src);
  }
  return out;
}

}  // namespace kproj
