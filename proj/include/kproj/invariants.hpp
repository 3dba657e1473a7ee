#pragma once

#include "kproj/representations.hpp"

namespace kproj {

/// P_N = sum over cyclic index strings of
/// rho(e_{i1}^{i2}) (x) rho(e_{i2}^{i3}) (x) ... (x) rho(e_{iN}^{i1}) on W^{(x)N}.
/// Verifies P_N^2 = P_N. Throws DimensionOverflow when dim W^{2N} exceeds the
/// entry cap, IdempotencyFailure.
template <Field T>
Matrix<T> build_P_N(const EnRepresentation<T>& rho, std::size_t n_factors);

/// Squared Frobenius norm of P_N^2 - P_N, computed exactly from the
/// matrix-product form of P_N without materializing W^{(x)N}. Zero iff P_N is
/// idempotent. Throws DimensionOverflow when the n^4 x n^4 transfer operator
/// does not fit the cap.
template <Field T>
T idempotency_defect(const EnRepresentation<T>& rho, std::size_t n_factors);

enum class TraceMode {
  materialize,  // trace of the dense P_N
  network,      // tr(M^N) with M(i, j) = tr rho(e_i^j); no W^{(x)N}
};

std::string_view trace_mode_name(TraceMode mode);

/// tr(P_N). Throws DimensionOverflow in materialize mode.
template <Field T>
T trace_P_N_direct(const EnRepresentation<T>& rho, std::size_t n_factors, TraceMode mode = TraceMode::network);

/// M(i, j) = tr rho(e_i^j), the n x n operator of the cyclic trace network.
template <Field T>
Matrix<T> trace_network_matrix(const EnRepresentation<T>& rho);

/// T(i, j) = sum_t m(i, t) r(t, j). Throws ShapeMismatch.
template <Field T>
Matrix<T> transfer_matrix_commutative(const ZeroOneMatrix& r, const Multiplicities& m);

/// T(a1, a2) = sum_b m(a1, b) tr(Q-bar(a2, b)). Throws ShapeMismatch.
template <Field T>
Matrix<T> transfer_matrix_semisimple(const SemisimpleData<T>& d, const Multiplicities& m);

/// tr(T^N) by repeated squaring.
template <Field T>
T trace_via_transfer(const Matrix<T>& transfer, std::size_t n_factors);

}  // namespace kproj
