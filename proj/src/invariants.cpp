#include "kproj/invariants.hpp"

#include <cmath>

#include "kproj/limits.hpp"

namespace kproj {

std::string_view trace_mode_name(TraceMode mode) {
  return mode == TraceMode::materialize ? "direct" : "network";
}

namespace {

// <X, Y> = sum of conj(X) * Y over all entries of two operators given in
// matrix-product form with cyclic bond: tr(E^N) for the transfer operator
// E((p, q), (p', q')) = sum_{w, w'} conj(X[p][p'](w, w')) Y[q][q'](w, w').
template <Field T>
Matrix<T> overlap_transfer(const std::vector<Matrix<T>>& x, std::size_t bx, const std::vector<Matrix<T>>& y,
                           std::size_t by) {
  require_within_cap(saturating_mul(saturating_mul(bx, by), saturating_mul(bx, by)), "overlap transfer operator");
  Matrix<T> e(bx * by, bx * by);
  for (std::size_t p = 0; p < bx; ++p)
    for (std::size_t p2 = 0; p2 < bx; ++p2) {
      const auto& xs = x[p * bx + p2].data();
      for (std::size_t q = 0; q < by; ++q)
        for (std::size_t q2 = 0; q2 < by; ++q2) {
          const auto& ys = y[q * by + q2].data();
          T acc(0);
          for (std::size_t k = 0; k < xs.size(); ++k) {
            if (!is_zero(xs[k]) && !is_zero(ys[k])) acc += conj(xs[k]) * ys[k];
          }
          e(p * by + q, p2 * by + q2) = acc;
        }
    }
  return e;
}

template <Field T>
struct Defect {
  T value{0};
  T norm_p{0};  // squared Frobenius norm of P_N
};

template <Field T>
Defect<T> defect(const EnRepresentation<T>& rho, std::size_t n_factors) {
  if (n_factors == 0) throw ShapeMismatch("N must be positive");
  const std::size_t n = rho.n(), n2 = n * n;
  const auto& a = rho.images();
  if (rho.dimension() == 0) return {};
  // Sites of P_N^2: bond (i, j), operator A[i][i'] A[j][j'].
  require_within_cap(saturating_mul(n2 * n2, n2 * n2), "overlap transfer operator");
  std::vector<Matrix<T>> b(n2 * n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < n; ++j2)
          b[(i * n + j) * n2 + i2 * n + j2] = a[i * n + i2] * a[j * n + j2];

  auto overlap = [n_factors](const Matrix<T>& e) { return trace(power(e, n_factors)); };
  const T bb = overlap(overlap_transfer(b, n2, b, n2));
  const T ba = overlap(overlap_transfer(b, n2, a, n));
  const T ab = overlap(overlap_transfer(a, n, b, n2));
  const T aa = overlap(overlap_transfer(a, n, a, n));
  return {T(bb - ba - ab + aa), aa};
}

template <Field T>
bool defect_vanishes(const Defect<T>& d) {
  if constexpr (std::same_as<T, Rational>) {
    return is_zero(d.value);
  } else {
    const double scale = std::max(1.0, std::sqrt(std::abs(d.norm_p)));
    return std::sqrt(std::abs(d.value)) <= epsilon() * scale;
  }
}

}  // namespace

template <Field T>
T idempotency_defect(const EnRepresentation<T>& rho, std::size_t n_factors) {
  return defect(rho, n_factors).value;
}

template <Field T>
Matrix<T> build_P_N(const EnRepresentation<T>& rho, std::size_t n_factors) {
  if (n_factors == 0) throw ShapeMismatch("N must be positive");
  const std::size_t n = rho.n(), d = rho.dimension();
  const std::size_t side = saturating_pow(d, n_factors);
  require_within_cap(saturating_mul(side, side), "P_N");

  Matrix<T> p(side, side);
  for (std::size_t start = 0; start < n; ++start) {
    // y[b]: sum over strings start -> ... -> b of the partial tensor products.
    std::vector<Matrix<T>> y(n);
    for (std::size_t b = 0; b < n; ++b) y[b] = rho.image(start, b);
    for (std::size_t k = 1; k < n_factors; ++k) {
      const std::size_t dim = y[0].rows() * d;
      std::vector<Matrix<T>> next(n, Matrix<T>(dim, dim));
      for (std::size_t c = 0; c < n; ++c) {
        if (is_zero_matrix(y[c])) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (!is_zero_matrix(rho.image(c, b))) next[b] += kron(y[c], rho.image(c, b));
        }
      }
      y = std::move(next);
    }
    p += y[start];
  }

  bool idempotent;
  if (saturating_pow(n, 8) <= entry_cap()) {
    idempotent = defect_vanishes(defect(rho, n_factors));
  } else {
    idempotent = is_idempotent(p);
  }
  if (!idempotent) throw IdempotencyFailure("P_" + std::to_string(n_factors) + " is not idempotent");
  return p;
}

template <Field T>
Matrix<T> trace_network_matrix(const EnRepresentation<T>& rho) {
  const std::size_t n = rho.n();
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rho.dimension() == 0 ? T(0) : trace(rho.image(i, j));
  return m;
}

template <Field T>
T trace_P_N_direct(const EnRepresentation<T>& rho, std::size_t n_factors, TraceMode mode) {
  if (n_factors == 0) throw ShapeMismatch("N must be positive");
  if (mode == TraceMode::materialize) return trace(build_P_N(rho, n_factors));
  return trace(power(trace_network_matrix(rho), n_factors));
}

template <Field T>
Matrix<T> transfer_matrix_commutative(const ZeroOneMatrix& r, const Multiplicities& m) {
  const std::size_t n = r.size();
  if (m.size() != n) throw ShapeMismatch("multiplicity matrix must be n x n");
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw ShapeMismatch("multiplicity matrix must be n x n");
    for (std::size_t j = 0; j < n; ++j) {
      long acc = 0;
      for (std::size_t t = 0; t < n; ++t) acc += static_cast<long>(m[i][t]) * (r.get(t, j) ? 1 : 0);
      out(i, j) = from_int<T>(acc);
    }
  }
  return out;
}

template <Field T>
Matrix<T> transfer_matrix_semisimple(const SemisimpleData<T>& d, const Multiplicities& m) {
  d.validate_shapes();
  const std::size_t r = d.l_dims.size(), t = d.m_dims.size();
  if (m.size() != r) throw ShapeMismatch("multiplicity matrix must have one row per L block");
  Matrix<T> out(r, r);
  for (std::size_t a1 = 0; a1 < r; ++a1) {
    if (m[a1].size() != t) throw ShapeMismatch("multiplicity matrix must have one column per M block");
    for (std::size_t a2 = 0; a2 < r; ++a2) {
      T acc(0);
      for (std::size_t b = 0; b < t; ++b) {
        if (m[a1][b] != 0) acc += from_int<T>(static_cast<long>(m[a1][b])) * trace(d.q_bar[a2][b]);
      }
      out(a1, a2) = acc;
    }
  }
  return out;
}

template <Field T>
T trace_via_transfer(const Matrix<T>& transfer, std::size_t n_factors) {
  if (n_factors == 0) throw ShapeMismatch("N must be positive");
  return trace(power(transfer, n_factors));
}

#define KPROJ_INSTANTIATE(T)                                                                     \
  template Matrix<T> build_P_N(const EnRepresentation<T>&, std::size_t);                         \
  template T idempotency_defect(const EnRepresentation<T>&, std::size_t);                        \
  template T trace_P_N_direct(const EnRepresentation<T>&, std::size_t, TraceMode);               \
  template Matrix<T> trace_network_matrix(const EnRepresentation<T>&);                           \
  template Matrix<T> transfer_matrix_commutative(const ZeroOneMatrix&, const Multiplicities&);   \
  template Matrix<T> transfer_matrix_semisimple(const SemisimpleData<T>&, const Multiplicities&); \
  template T trace_via_transfer(const Matrix<T>&, std::size_t);

KPROJ_INSTANTIATE(Rational)
KPROJ_INSTANTIATE(Complex)

#undef KPROJ_INSTANTIATE

}  // namespace kproj
