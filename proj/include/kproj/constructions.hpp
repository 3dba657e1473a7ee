#pragma once

#include "kproj/p_algebra.hpp"

namespace kproj {

/// P-algebra with commutative semisimple product and coproduct attached to a
/// nonsingular (0,1)-matrix r. The result is written in the basis f where the
/// product is diagonal (f_b f_b = f_b); the coproduct is diagonal in the basis
/// e_a = sum_t r(a, t) f_t. r is kept as the recipe.
/// Throws SingularMatrix.
template <Field T>
PAlgebra<T> from_zero_one_matrix(const ZeroOneMatrix& r);

/// Throws QBarNotProjector naming the first (alpha, beta) block (1-based)
/// whose rearranged block is not idempotent.
template <Field T>
void require_q_bar_projectors(const SemisimpleData<T>& d);

/// P-algebra on the direct sum of End(M_beta): the product is block matrix
/// multiplication in the matrix-unit basis b(beta, t, q), the coproduct is the
/// matrix-unit comultiplication of the L blocks transported through Q.
/// Throws DimensionMismatch, QBarNotProjector, QNotInvertible.
template <Field T>
PAlgebra<T> from_semisimple_data(const SemisimpleData<T>& d);

/// P-algebra on Mat_n written in the given basis. The product is matrix
/// multiplication (structure constants by exact solve against the basis); the
/// coproduct is e -> e (x) e in example3 mode and e_ij -> sum_k e_ik (x) e_kj
/// in example4 mode.
/// Throws NotABasis, NotIdempotent, BlockNotIdempotent.
template <Field T>
PAlgebra<T> from_idempotent_basis(const IdempotentBasis<T>& basis);

/// The 2x2 block matrix E = [[a, b], [c, d]] with d = 1 - b^-1 a b and
/// c = b^-1 a (1 - a), together with its invariants.
template <Field T>
struct Example5Block {
  Matrix<T> a, b, c, d;
  Matrix<T> e;
  T trace{0};
  std::size_t rank = 0;
  bool idempotent = false;
  bool spans = false;  // a, b, c, d form a basis of Mat_2
};

/// Throws BNotInvertible; never rejects a non-spanning block, see `spans`.
template <Field T>
Example5Block<T> analyze_example5_block(const Matrix<T>& a, const Matrix<T>& b);

/// example4-mode basis (a, b, c, d). Throws BNotInvertible, NotABasis.
template <Field T>
IdempotentBasis<T> example5_block(const Matrix<T>& a, const Matrix<T>& b);

/// Single-block semisimple data with Q-bar = E for an example4-mode basis.
template <Field T>
SemisimpleData<T> semisimple_from_block_basis(const IdempotentBasis<T>& basis);

}  // namespace kproj
