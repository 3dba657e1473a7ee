#include "kproj/recipes.hpp"

#include <numeric>

namespace kproj {

template <Field T>
std::size_t SemisimpleData<T>::total_dimension() const {
  std::size_t d = 0;
  for (auto k : m_dims) d += k * k;
  return d;
}

template <Field T>
std::size_t SemisimpleData<T>::l_offset(std::size_t alpha) const {
  std::size_t off = 0;
  for (std::size_t a = 0; a < alpha; ++a) off += l_dims[a] * l_dims[a];
  return off;
}

template <Field T>
std::size_t SemisimpleData<T>::m_offset(std::size_t beta) const {
  std::size_t off = 0;
  for (std::size_t b = 0; b < beta; ++b) off += m_dims[b] * m_dims[b];
  return off;
}

template <Field T>
void SemisimpleData<T>::validate_shapes() const {
  if (l_dims.empty() || m_dims.empty()) throw DimensionMismatch("both block families must be nonempty");
  for (auto k : l_dims)
    if (k == 0) throw DimensionMismatch("L dimensions must be positive");
  for (auto k : m_dims)
    if (k == 0) throw DimensionMismatch("M dimensions must be positive");
  std::size_t l_total = 0;
  for (auto k : l_dims) l_total += k * k;
  if (l_total != total_dimension()) {
    throw DimensionMismatch("sum of dim(L)^2 is " + std::to_string(l_total) + " but sum of dim(M)^2 is " +
                            std::to_string(total_dimension()));
  }
  if (q_bar.size() != l_dims.size()) throw DimensionMismatch("q_bar needs one row of blocks per L");
  for (std::size_t a = 0; a < l_dims.size(); ++a) {
    if (q_bar[a].size() != m_dims.size()) throw DimensionMismatch("q_bar needs one block per (L, M) pair");
    for (std::size_t b = 0; b < m_dims.size(); ++b) {
      const std::size_t side = l_dims[a] * m_dims[b];
      if (q_bar[a][b].rows() != side || q_bar[a][b].cols() != side) {
        throw DimensionMismatch("block (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") must be " +
                                std::to_string(side) + "x" + std::to_string(side));
      }
    }
  }
}

template <Field T>
Matrix<T> SemisimpleData<T>::assemble_q() const {
  validate_shapes();
  const std::size_t d = total_dimension();
  Matrix<T> q(d, d);
  for (std::size_t a = 0; a < l_dims.size(); ++a) {
    const std::size_t k = l_dims[a];
    for (std::size_t b = 0; b < m_dims.size(); ++b) {
      const std::size_t m = m_dims[b];
      const Matrix<T>& blk = q_bar[a][b];
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t t = 0; t < m; ++t)
            for (std::size_t qq = 0; qq < m; ++qq) {
              q(m_offset(b) + t * m + qq, l_offset(a) + i * k + j) = blk(i * m + t, j * m + qq);
            }
    }
  }
  return q;
}

template <Field T>
SemisimpleData<T> SemisimpleData<T>::from_q(std::vector<std::size_t> l_dims, std::vector<std::size_t> m_dims,
                                            const Matrix<T>& q) {
  SemisimpleData out;
  out.l_dims = std::move(l_dims);
  out.m_dims = std::move(m_dims);
  const std::size_t d = out.total_dimension();
  if (q.rows() != d || q.cols() != d) throw DimensionMismatch("Q has the wrong size");
  out.q_bar.assign(out.l_dims.size(), {});
  for (std::size_t a = 0; a < out.l_dims.size(); ++a) {
    const std::size_t k = out.l_dims[a];
    for (std::size_t b = 0; b < out.m_dims.size(); ++b) {
      const std::size_t m = out.m_dims[b];
      Matrix<T> blk(k * m, k * m);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t t = 0; t < m; ++t)
            for (std::size_t qq = 0; qq < m; ++qq) {
              blk(i * m + t, j * m + qq) = q(out.m_offset(b) + t * m + qq, out.l_offset(a) + i * k + j);
            }
      out.q_bar[a].push_back(std::move(blk));
    }
  }
  out.validate_shapes();
  return out;
}

template <Field T>
SemisimpleData<T> SemisimpleData<T>::from_zero_one(const ZeroOneMatrix& r) {
  SemisimpleData out;
  const std::size_t n = r.size();
  out.l_dims.assign(n, 1);
  out.m_dims.assign(n, 1);
  out.q_bar.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix<T> blk(1, 1);
      blk(0, 0) = r.get(a, b) ? T(1) : T(0);
      out.q_bar[a].push_back(std::move(blk));
    }
  return out;
}

std::string_view basis_mode_name(BasisMode mode) { return mode == BasisMode::example3 ? "example3" : "example4"; }

BasisMode parse_basis_mode(std::string_view name) {
  if (name == "example3") return BasisMode::example3;
  if (name == "example4") return BasisMode::example4;
  throw ParseError("unknown basis mode '" + std::string(name) + "'");
}

template <Field T>
Matrix<T> IdempotentBasis<T>::block_matrix() const {
  if (matrices.size() != n * n) throw ShapeMismatch("an idempotent basis needs n^2 matrices");
  Matrix<T> e(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix<T>& blk = matrices[i * n + j];
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t q = 0; q < n; ++q) e(i * n + t, j * n + q) = blk(t, q);
    }
  return e;
}

template struct SemisimpleData<Rational>;
template struct SemisimpleData<Complex>;
template struct IdempotentBasis<Rational>;
template struct IdempotentBasis<Complex>;

}  // namespace kproj
