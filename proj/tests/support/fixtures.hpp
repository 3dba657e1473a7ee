#pragma once

#include <random>
#include <vector>

#include "kproj/constructions.hpp"
#include "support/access.hpp"

namespace kproj::testing {

using Q = Rational;

/// Product table from a list of (i, j) -> k, 0-based.
inline Tensor<Q> product_table(std::size_t n, const std::vector<std::array<std::size_t, 3>>& entries) {
  auto c = Tensor<Q>::cube(n);
  for (auto [i, j, k] : entries) c(i, j, k) = Q(1);
  return c;
}

inline Tensor<Q> diagonal_coproduct(std::size_t n) {
  auto s = Tensor<Q>::cube(n);
  for (std::size_t i = 0; i < n; ++i) s(i, i, i) = Q(1);
  return s;
}

/// The four products on span(e1, e2) compatible with the diagonal coproduct.
inline Tensor<Q> example1_product(int which) {
  switch (which) {
    case 1: return product_table(2, {{0, 0, 0}, {1, 1, 1}});
    case 2: return product_table(2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}, {1, 0, 1}});
    case 3: return product_table(2, {{0, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 0, 1}});
    case 4: return product_table(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {0, 1, 1}});
    default: throw std::invalid_argument("example 1 has products 1..4");
  }
}

inline PAlgebra<Q> example1(int which) {
  return PAlgebra<Q>::create(example1_product(which), diagonal_coproduct(2), "example1-" + std::to_string(which));
}

inline ZeroOneMatrix zo(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return ZeroOneMatrix::from_rows(v);
}

inline Matrix<Q> qm(std::initializer_list<std::initializer_list<long>> rows) { return Matrix<Q>::from_ints(rows); }

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::size_t index(std::size_t hi) { return static_cast<std::size_t>(integer(0, static_cast<long>(hi) - 1)); }

  /// Small rational p/q with |p| <= 4, 1 <= q <= 3.
  Q rational() {
    Q x(integer(-4, 4), integer(1, 3));
    x.canonicalize();
    return x;
  }

  Matrix<Q> matrix(std::size_t r, std::size_t c) {
    Matrix<Q> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = rational();
        m(i, j).canonicalize();
      }
    return m;
  }

  Matrix<Q> invertible(std::size_t n) {
    for (;;) {
      auto m = matrix(n, n);
      if (inverse(m)) return m;
    }
  }

  /// S D S^-1 with D a 0/1 diagonal of the given rank.
  Matrix<Q> projector(std::size_t n, std::size_t rank) {
    const auto s = invertible(n);
    Matrix<Q> d(n, n);
    for (std::size_t i = 0; i < rank; ++i) d(i, i) = Q(1);
    return s * d * *inverse(s);
  }

  ZeroOneMatrix zero_one(std::size_t n) {
    ZeroOneMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, integer(0, 1) == 1);
    return m;
  }

  ZeroOneMatrix nonsingular_zero_one(std::size_t n) {
    for (;;) {
      auto m = zero_one(n);
      if (m.is_nonsingular()) return m;
    }
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), gen_);
    return p;
  }

  /// Random balanced dimensions and projector blocks; Q is invertible.
  SemisimpleData<Q> semisimple(std::size_t max_total) {
    for (;;) {
      SemisimpleData<Q> d = random_shapes(max_total);
      d.q_bar.assign(d.l_dims.size(), std::vector<Matrix<Q>>(d.m_dims.size()));
      for (std::size_t a = 0; a < d.l_dims.size(); ++a)
        for (std::size_t b = 0; b < d.m_dims.size(); ++b) {
          const std::size_t k = d.l_dims[a] * d.m_dims[b];
          d.q_bar[a][b] = projector(k, static_cast<std::size_t>(integer(0, static_cast<long>(k))));
        }
      if (inverse(d.assemble_q())) return d;
    }
  }

  SemisimpleData<Q> random_shapes(std::size_t max_total) {
    // Balanced sums of squares: pick from a few known decompositions.
    static const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> shapes = {
        {{1}, {1}},       {{1, 1}, {1, 1}},       {{2}, {2}},          {{2}, {1, 1, 1, 1}},
        {{1, 1, 1, 1}, {2}}, {{1, 1, 1}, {1, 1, 1}}, {{2, 1}, {2, 1}},    {{2, 1}, {1, 1, 1, 1, 1}},
        {{3}, {2, 2, 1}}, {{2, 2, 1}, {3}},       {{3}, {3}},          {{2, 2}, {2, 2}},
        {{1, 1, 1, 1}, {1, 1, 1, 1}}};
    for (;;) {
      const auto& [l, m] = shapes[index(shapes.size())];
      std::size_t total = 0;
      for (auto k : l) total += k * k;
      if (total <= max_total) return SemisimpleData<Q>{l, m, {}};
    }
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace kproj::testing
