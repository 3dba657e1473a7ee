#include "kproj/envelope.hpp"

#include <sstream>
#include <stdexcept>

namespace kproj {

namespace {

template <Field T>
void add_scaled(Matrix<T>& acc, const T& w, const Matrix<T>& m) {
  if (is_zero(w)) return;
  for (std::size_t k = 0; k < m.data().size(); ++k) {
    const T& x = m.data()[k];
    if (!is_zero(x)) acc.data()[k] += w * x;
  }
}

}  // namespace

std::string RelationReport::describe() const {
  std::ostringstream os;
  for (const auto& f : families) {
    os << f.name << ": " << (f.passed ? "pass" : "FAIL");
    if (!f.passed) {
      os << " at (";
      for (std::size_t k = 0; k < f.witness.size(); ++k) os << (k ? "," : "") << f.witness[k] + 1;
      os << ")";
    }
    os << '\n';
  }
  return os.str();
}

template <Field T>
std::size_t representation_dimension(const PAlgebra<T>& p, const GeneratorImages<T>& rho) {
  const std::size_t n = p.dimension();
  if (rho.size() != n * n) throw ShapeMismatch("need one matrix per generator e_i^j");
  const std::size_t d = rho.front().rows();
  for (const auto& m : rho) {
    if (m.rows() != d || m.cols() != d) throw ShapeMismatch("generator images must be square of one size");
  }
  return d;
}

template <Field T>
std::vector<Matrix<T>> pair_products(const GeneratorImages<T>& rho) {
  std::vector<Matrix<T>> out;
  out.reserve(rho.size() * rho.size());
  for (const auto& a : rho)
    for (const auto& b : rho) out.push_back(a * b);
  return out;
}

template <Field T>
RelationReport check_weak_relations(const PAlgebra<T>& p, const GeneratorImages<T>& rho) {
  const std::size_t d = representation_dimension(p, rho);
  const std::size_t n = p.dimension(), n2 = n * n;
  const auto& c = p.product();
  const auto& s = p.coproduct();
  const auto pp = pair_products(rho);
  auto g = [&](std::size_t i, std::size_t j) -> const Matrix<T>& { return rho[i * n + j]; };
  auto gg = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> const Matrix<T>& {
    return pp[(i * n + j) * n2 + k * n + l];
  };

  FamilyCheck fc{"product relation", true, {}}, fs{"coproduct relation", true, {}};
  for (std::size_t i = 0; i < n && fc.passed; ++i)
    for (std::size_t j = 0; j < n && fc.passed; ++j)
      for (std::size_t k = 0; k < n && fc.passed; ++k) {
        Matrix<T> lhs(d, d), rhs(d, d);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t t = 0; t < n; ++t) add_scaled(lhs, c(r, t, k), gg(j, t, i, r));
        for (std::size_t q = 0; q < n; ++q) add_scaled(rhs, c(i, j, q), g(q, k));
        if (!approx_equal(lhs, rhs)) fc = {fc.name, false, {i, j, k}};
      }
  for (std::size_t i = 0; i < n && fs.passed; ++i)
    for (std::size_t j = 0; j < n && fs.passed; ++j)
      for (std::size_t k = 0; k < n && fs.passed; ++k) {
        Matrix<T> lhs(d, d), rhs(d, d);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t t = 0; t < n; ++t) add_scaled(lhs, s(i, r, t), gg(t, k, r, j));
        for (std::size_t q = 0; q < n; ++q) add_scaled(rhs, s(q, j, k), g(i, q));
        if (!approx_equal(lhs, rhs)) fs = {fs.name, false, {i, j, k}};
      }
  return RelationReport{{fc, fs}};
}

template <Field T>
RelationReport check_envelope_relation(const PAlgebra<T>& p, const GeneratorImages<T>& rho) {
  const std::size_t d = representation_dimension(p, rho);
  const std::size_t n = p.dimension();
  const auto& c = p.product();
  const auto& s = p.coproduct();
  FamilyCheck f{"envelope product", true, {}};
  for (std::size_t j = 0; j < n && f.passed; ++j)
    for (std::size_t l = 0; l < n && f.passed; ++l)
      for (std::size_t i = 0; i < n && f.passed; ++i)
        for (std::size_t k = 0; k < n && f.passed; ++k) {
          const Matrix<T> lhs = rho[j * n + l] * rho[i * n + k];
          Matrix<T> rhs(d, d);
          for (std::size_t t = 0; t < n; ++t) {
            if (is_zero(c(i, j, t))) continue;
            for (std::size_t r = 0; r < n; ++r) add_scaled(rhs, T(c(i, j, t) * s(r, k, l)), rho[t * n + r]);
          }
          if (!approx_equal(lhs, rhs)) f = {f.name, false, {j, l, i, k}};
        }
  return RelationReport{{f}};
}

template <Field T>
RelationReport check_zero_action_relation(const PAlgebra<T>& p, const GeneratorImages<T>& rho) {
  const std::size_t d = representation_dimension(p, rho);
  const std::size_t n = p.dimension(), n2 = n * n;
  const auto& c = p.product();
  const auto& s = p.coproduct();
  const auto pp = pair_products(rho);
  FamilyCheck f{"zero action relation", true, {}};
  for (std::size_t j = 0; j < n && f.passed; ++j)
    for (std::size_t l = 0; l < n && f.passed; ++l)
      for (std::size_t i = 0; i < n && f.passed; ++i)
        for (std::size_t k = 0; k < n && f.passed; ++k) {
          Matrix<T> rhs(d, d);
          for (std::size_t r = 0; r < n; ++r) {
            if (is_zero(c(i, j, r))) continue;
            for (std::size_t q = 0; q < n; ++q)
              for (std::size_t t = 0; t < n; ++t)
                add_scaled(rhs, T(c(i, j, r) * s(r, q, t)), pp[(t * n + l) * n2 + q * n + k]);
          }
          if (!approx_equal(pp[(j * n + l) * n2 + i * n + k], rhs)) f = {f.name, false, {j, l, i, k}};
        }
  return RelationReport{{f}};
}

template <Field T>
GeneratorImages<T> EnvelopeAlgebra<T>::left_regular() const {
  const std::size_t m = dimension();
  GeneratorImages<T> out(m, Matrix<T>(m, m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) out[x](z, y) = product_(x, y, z);
  return out;
}

template <Field T>
EnvelopeAlgebra<T> envelope(const PAlgebra<T>& p) {
  const std::size_t n = p.dimension(), m = n * n;
  const auto& c = p.product();
  const auto& s = p.coproduct();
  auto e = Tensor<T>::cube(m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t t = 0; t < n; ++t) {
            if (is_zero(c(i, j, t))) continue;
            for (std::size_t r = 0; r < n; ++r) e(j * n + l, i * n + k, t * n + r) = c(i, j, t) * s(r, k, l);
          }
  if (!is_associative(e)) throw std::logic_error("envelope product is not associative");
  EnvelopeAlgebra<T> env(p, std::move(e));
  if (!check_weak_relations(p, env.left_regular()).passed()) {
    throw std::logic_error("left regular representation of the envelope violates the weak relations");
  }
  return env;
}

#define KPROJ_INSTANTIATE(T)                                                                        \
  template class EnvelopeAlgebra<T>;                                                                \
  template EnvelopeAlgebra<T> envelope(const PAlgebra<T>&);                                         \
  template std::size_t representation_dimension(const PAlgebra<T>&, const GeneratorImages<T>&);     \
  template std::vector<Matrix<T>> pair_products(const GeneratorImages<T>&);                         \
  template RelationReport check_weak_relations(const PAlgebra<T>&, const GeneratorImages<T>&);      \
  template RelationReport check_envelope_relation(const PAlgebra<T>&, const GeneratorImages<T>&);   \
  template RelationReport check_zero_action_relation(const PAlgebra<T>&, const GeneratorImages<T>&);

KPROJ_INSTANTIATE(Rational)
KPROJ_INSTANTIATE(Complex)

#undef KPROJ_INSTANTIATE

}  // namespace kproj
