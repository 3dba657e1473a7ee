#include "kproj/constructions.hpp"

namespace kproj {

template <Field T>
PAlgebra<T> from_zero_one_matrix(const ZeroOneMatrix& r) {
  const std::size_t n = r.size();
  const auto rm = r.to_matrix<T>();
  const auto inv = inverse(rm);
  if (!inv) throw SingularMatrix("zero-one matrix is singular:\n" + r.to_text());

  auto c = Tensor<T>::cube(n);
  for (std::size_t i = 0; i < n; ++i) c(i, i, i) = T(1);

  // f_b = sum_a r^-1(b, a) e_a and lambda(e_a) = e_a (x) e_a.
  auto s = Tensor<T>::cube(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      const T& w = (*inv)(b, a);
      if (is_zero(w)) continue;
      for (std::size_t p = 0; p < n; ++p) {
        if (!r.get(a, p)) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (r.get(a, q)) s(b, p, q) += w;
        }
      }
    }
  return PAlgebra<T>::create(std::move(c), std::move(s), "zero-one " + r.bitstring(), r);
}

template <Field T>
void require_q_bar_projectors(const SemisimpleData<T>& d) {
  d.validate_shapes();
  for (std::size_t a = 0; a < d.l_dims.size(); ++a)
    for (std::size_t b = 0; b < d.m_dims.size(); ++b) {
      if (!is_idempotent(d.q_bar[a][b])) {
        throw QBarNotProjector("block (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                               ") is not idempotent");
      }
    }
}

template <Field T>
PAlgebra<T> from_semisimple_data(const SemisimpleData<T>& d) {
  require_q_bar_projectors(d);
  const Matrix<T> q = d.assemble_q();
  const auto q_inv = inverse(q);
  if (!q_inv) throw QNotInvertible("assembled Q is singular");

  const std::size_t n = d.total_dimension();
  auto c = Tensor<T>::cube(n);
  for (std::size_t b = 0; b < d.m_dims.size(); ++b) {
    const std::size_t m = d.m_dims[b], off = d.m_offset(b);
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < m; ++k) c(off + t * m + r, off + r * m + k, off + t * m + k) = T(1);
  }

  // lambda(b_x) = sum_a Q^-1(a, x) lambda(a), with
  // lambda(a(alpha, i, j)) = sum_p a(alpha, i, p) (x) a(alpha, p, j).
  auto s = Tensor<T>::cube(n);
  for (std::size_t al = 0; al < d.l_dims.size(); ++al) {
    const std::size_t k = d.l_dims[al], off = d.l_offset(al);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t p = 0; p < k; ++p) {
          const std::size_t a_ij = off + i * k + j, a_ip = off + i * k + p, a_pj = off + p * k + j;
          for (std::size_t x = 0; x < n; ++x) {
            const T& w = (*q_inv)(a_ij, x);
            if (is_zero(w)) continue;
            for (std::size_t y = 0; y < n; ++y) {
              const T& u = q(y, a_ip);
              if (is_zero(u)) continue;
              const T wu = w * u;
              for (std::size_t z = 0; z < n; ++z) {
                const T& v = q(z, a_pj);
                if (!is_zero(v)) s(x, y, z) += wu * v;
              }
            }
          }
        }
  }
  return PAlgebra<T>::create(std::move(c), std::move(s), "semisimple", d);
}

template <Field T>
PAlgebra<T> from_idempotent_basis(const IdempotentBasis<T>& basis) {
  const std::size_t n = basis.n;
  const std::size_t dim = n * n;
  if (n == 0 || basis.matrices.size() != dim) throw NotABasis("need exactly n^2 matrices");
  for (const auto& m : basis.matrices) {
    if (m.rows() != n || m.cols() != n) throw ShapeMismatch("basis matrices must be n x n");
  }

  Matrix<T> cols(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t k = 0; k < dim; ++k) cols(k, a) = basis.matrices[a].data()[k];
  const auto inv = inverse(cols);
  if (!inv) throw NotABasis("the matrices are linearly dependent");

  auto s = Tensor<T>::cube(dim);
  if (basis.mode == BasisMode::example3) {
    for (std::size_t a = 0; a < dim; ++a) {
      if (!is_idempotent(basis.matrices[a])) {
        throw NotIdempotent("basis matrix " + std::to_string(a + 1) + " is not idempotent");
      }
      s(a, a, a) = T(1);
    }
  } else {
    if (!is_idempotent(basis.block_matrix())) throw BlockNotIdempotent("block matrix E has E^2 != E");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) s(i * n + j, i * n + k, k * n + j) = T(1);
  }

  auto c = Tensor<T>::cube(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const Matrix<T> prod = basis.matrices[a] * basis.matrices[b];
      for (std::size_t g = 0; g < dim; ++g) {
        T acc(0);
        for (std::size_t k = 0; k < dim; ++k) acc += (*inv)(g, k) * prod.data()[k];
        c(a, b, g) = acc;
      }
    }
  return PAlgebra<T>::create(std::move(c), std::move(s), std::string("idempotent-basis ") +
                                                            std::string(basis_mode_name(basis.mode)),
                             basis);
}

template <Field T>
Example5Block<T> analyze_example5_block(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw ShapeMismatch("example 5 blocks are 2x2");
  }
  const auto b_inv = inverse(b);
  if (!b_inv) throw BNotInvertible("b is singular");
  const auto one = Matrix<T>::identity(2);

  Example5Block<T> out;
  out.a = a;
  out.b = b;
  out.c = *b_inv * a * (one - a);
  out.d = one - *b_inv * a * b;

  IdempotentBasis<T> basis{2, BasisMode::example4, {out.a, out.b, out.c, out.d}};
  out.e = basis.block_matrix();
  out.idempotent = is_idempotent(out.e);
  out.trace = trace(out.e);
  out.rank = rank(out.e);

  SpanBasis<T> span(4);
  for (const auto& m : basis.matrices) span.insert(flatten(m));
  out.spans = span.full();
  return out;
}

template <Field T>
IdempotentBasis<T> example5_block(const Matrix<T>& a, const Matrix<T>& b) {
  auto blk = analyze_example5_block(a, b);
  if (!blk.spans) throw NotABasis("blocks a, b, c, d do not span Mat_2");
  if (!blk.idempotent) throw BlockNotIdempotent("E^2 != E");
  return IdempotentBasis<T>{2, BasisMode::example4, {blk.a, blk.b, blk.c, blk.d}};
}

template <Field T>
SemisimpleData<T> semisimple_from_block_basis(const IdempotentBasis<T>& basis) {
  if (basis.mode != BasisMode::example4) throw ShapeMismatch("needs an example4-mode basis");
  SemisimpleData<T> d;
  d.l_dims = {basis.n};
  d.m_dims = {basis.n};
  d.q_bar = {{basis.block_matrix()}};
  return d;
}

#define KPROJ_INSTANTIATE(T)                                                          \
  template PAlgebra<T> from_zero_one_matrix(const ZeroOneMatrix&);                    \
  template void require_q_bar_projectors(const SemisimpleData<T>&);                   \
  template PAlgebra<T> from_semisimple_data(const SemisimpleData<T>&);                \
  template PAlgebra<T> from_idempotent_basis(const IdempotentBasis<T>&);              \
  template struct Example5Block<T>;                                                   \
  template Example5Block<T> analyze_example5_block(const Matrix<T>&, const Matrix<T>&); \
  template IdempotentBasis<T> example5_block(const Matrix<T>&, const Matrix<T>&);     \
  template SemisimpleData<T> semisimple_from_block_basis(const IdempotentBasis<T>&);

KPROJ_INSTANTIATE(Rational)
KPROJ_INSTANTIATE(Complex)

#undef KPROJ_INSTANTIATE

}  // namespace kproj
