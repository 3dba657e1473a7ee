#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "kproj/matrix.hpp"
#include "kproj/zero_one.hpp"

namespace kproj {

/// Data classifying a P-algebra with semisimple product and coproduct.
///
/// The coalgebra side decomposes V as a sum of blocks L_a (x) L_a^*, with basis
/// a(alpha, i, j); the algebra side as a sum of matrix blocks M_b (x) M_b^*,
/// with matrix units b(beta, t, q). Q maps the first basis to the second:
///
///   a(alpha, i, j) = sum Q^{beta, j, t}_{alpha, i, q} b(beta, t, q).
///
/// q_bar[alpha][beta] is the same coefficient array read as an operator on
/// L_alpha (x) M_beta^*, with entry ((i, t), (j, q)), rows and columns ordered
/// L-index major.
template <Field T>
struct SemisimpleData {
  std::vector<std::size_t> l_dims;
  std::vector<std::size_t> m_dims;
  std::vector<std::vector<Matrix<T>>> q_bar;

  std::size_t total_dimension() const;
  /// Offset of a(alpha, 0, 0) in the coalgebra basis.
  std::size_t l_offset(std::size_t alpha) const;
  /// Offset of b(beta, 0, 0) in the algebra basis.
  std::size_t m_offset(std::size_t beta) const;

  /// Throws DimensionMismatch when dimensions are not positive, unbalanced,
  /// or a block has the wrong size.
  void validate_shapes() const;

  /// The full matrix of Q: column a(alpha, i, j), row b(beta, t, q).
  Matrix<T> assemble_q() const;

  /// Inverse of assemble_q: cuts a full Q into its rearranged blocks.
  static SemisimpleData from_q(std::vector<std::size_t> l_dims, std::vector<std::size_t> m_dims,
                               const Matrix<T>& q);

  /// All blocks one-dimensional, Q given by the (0,1)-matrix: q_bar[a][b] = [r(a, b)].
  static SemisimpleData from_zero_one(const ZeroOneMatrix& r);
};

enum class BasisMode { example3, example4 };

std::string_view basis_mode_name(BasisMode mode);
BasisMode parse_basis_mode(std::string_view name);

/// A basis of Mat_n. In example3 mode every matrix is idempotent and the
/// coproduct is e -> e (x) e. In example4 mode matrices are indexed by pairs
/// (i, j), flat index i*n + j, and the block matrix E = (e_ij) is idempotent.
template <Field T>
struct IdempotentBasis {
  std::size_t n = 0;
  BasisMode mode = BasisMode::example3;
  std::vector<Matrix<T>> matrices;

  /// E with block (i, j) equal to e_ij; example4 mode only.
  Matrix<T> block_matrix() const;
};

/// How a P-algebra was built. Later stages (representations, transfer
/// matrices) need the construction data, not only the structure tensors.
template <Field T>
using Recipe = std::variant<std::monostate, ZeroOneMatrix, SemisimpleData<T>, IdempotentBasis<T>>;

template <Field T>
std::string_view recipe_name(const Recipe<T>& recipe) {
  switch (recipe.index()) {
    case 1: return "zero-one";
    case 2: return "semisimple";
    case 3: return "idempotent-basis";
    default: return "none";
  }
}

extern template struct SemisimpleData<Rational>;
extern template struct SemisimpleData<Complex>;
extern template struct IdempotentBasis<Rational>;
extern template struct IdempotentBasis<Complex>;

}  // namespace kproj
