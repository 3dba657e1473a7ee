#include "kproj/p_algebra.hpp"

#include <sstream>

namespace kproj {

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::associativity: return "associativity";
    case Relation::coassociativity: return "coassociativity";
    case Relation::section: return "section";
  }
  return "?";
}

template <Field T>
std::string AxiomReport<T>::describe() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << relation_name(c.relation) << ": " << (c.passed ? "pass" : "FAIL");
    if (!c.passed) {
      os << " at (";
      for (std::size_t k = 0; k < c.witness.size(); ++k) os << (k ? "," : "") << c.witness[k] + 1;
      os << ") lhs=" << to_string(c.lhs) << " rhs=" << to_string(c.rhs);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

template <Field T>
RelationCheck<T> compare(Relation rel, const Tensor<T>& lhs, const Tensor<T>& rhs) {
  RelationCheck<T> out{rel, true, {}, T(0), T(0)};
  for (std::size_t o = 0; o < lhs.size(); ++o) {
    if (!is_zero(T(lhs.data()[o] - rhs.data()[o]))) {
      out.passed = false;
      out.witness = lhs.unravel(o);
      out.lhs = lhs.data()[o];
      out.rhs = rhs.data()[o];
      break;
    }
  }
  return out;
}

template <Field T>
void require_cubic_pair(const Tensor<T>& c, const Tensor<T>& s) {
  if (!c.is_cubic() || !s.is_cubic() || c.shape() != s.shape()) {
    throw ShapeMismatch("product and coproduct must both be n x n x n");
  }
}

// c_{ij}^r c_{rk}^t against c_{ir}^t c_{jk}^r, both indexed (i, j, k, t).
template <Field T>
RelationCheck<T> check_associativity(const Tensor<T>& c) {
  const auto lhs = contract(c, c, {{2, 0}});
  const auto rhs = permute(contract(c, c, {{1, 2}}), {0, 2, 3, 1});
  return compare(Relation::associativity, lhs, rhs);
}

}  // namespace

template <Field T>
bool is_associative(const Tensor<T>& c) {
  if (!c.is_cubic()) throw ShapeMismatch("product must be n x n x n");
  return check_associativity(c).passed;
}

template <Field T>
AxiomReport<T> verify_axioms(const Tensor<T>& c, const Tensor<T>& s) {
  require_cubic_pair(c, s);
  const std::size_t n = c.shape()[0];
  AxiomReport<T> report;
  report.checks[0] = check_associativity(c);

  // s_t^{ir} s_r^{jk} against s_r^{ij} s_t^{rk}, reported as (i, j, k, t).
  const auto co_lhs = permute(contract(s, s, {{2, 0}}), {1, 2, 3, 0});
  const auto co_rhs = permute(contract(s, s, {{0, 1}}), {0, 1, 3, 2});
  report.checks[1] = compare(Relation::coassociativity, co_lhs, co_rhs);

  const auto sec = contract(s, c, {{1, 0}, {2, 1}});
  Tensor<T> delta({n, n});
  for (std::size_t i = 0; i < n; ++i) delta(i, i) = T(1);
  report.checks[2] = compare(Relation::section, sec, delta);
  return report;
}

template <Field T>
PAlgebra<T>::PAlgebra(Tensor<T> c, Tensor<T> s, std::string label, Recipe<T> recipe)
    : n_(c.shape()[0]), c_(std::move(c)), s_(std::move(s)), label_(std::move(label)), recipe_(std::move(recipe)) {}

template <Field T>
PAlgebra<T> PAlgebra<T>::create(Tensor<T> product, Tensor<T> coproduct, std::string label, Recipe<T> recipe) {
  const auto report = verify_axioms(product, coproduct);
  if (const auto* bad = report.first_failure()) {
    std::ostringstream os;
    os << relation_name(bad->relation) << " fails at (";
    for (std::size_t k = 0; k < bad->witness.size(); ++k) os << (k ? "," : "") << bad->witness[k] + 1;
    os << "): " << to_string(bad->lhs) << " != " << to_string(bad->rhs);
    throw AxiomViolation(os.str());
  }
  return PAlgebra(std::move(product), std::move(coproduct), std::move(label), std::move(recipe));
}

template <Field T>
Matrix<T> product_matrix(const Tensor<T>& c) {
  const std::size_t n = c.shape()[0];
  Matrix<T> m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = c(i, j, k);
  return m;
}

template <Field T>
Matrix<T> coproduct_matrix(const Tensor<T>& s) {
  const std::size_t n = s.shape()[0];
  Matrix<T> m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = s(i, j, k);
  return m;
}

template <Field T>
Matrix<T> mu_lambda_projector(const PAlgebra<T>& p) {
  return coproduct_matrix(p.coproduct()) * product_matrix(p.product());
}

template <Field T>
OppositeDual<T> opposite_dual(const PAlgebra<T>& p) {
  const std::size_t n = p.dimension();
  OppositeDual<T> out{Tensor<T>::cube(n), Tensor<T>::cube(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        out.op_product(i, j, k) = p.product()(j, i, k);
        out.op_dual_product(i, j, k) = p.coproduct()(k, j, i);
      }
  if (!is_associative(out.op_product) || !is_associative(out.op_dual_product)) {
    throw std::logic_error("opposite of an associative product is not associative");
  }
  return out;
}

template <Field T>
PAlgebra<T> dual(const PAlgebra<T>& p) {
  const std::size_t n = p.dimension();
  auto c = Tensor<T>::cube(n);
  auto s = Tensor<T>::cube(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        c(i, j, k) = p.coproduct()(k, i, j);
        s(k, i, j) = p.product()(i, j, k);
      }
  return PAlgebra<T>::create(std::move(c), std::move(s), p.label().empty() ? "" : p.label() + "*");
}

template <Field T>
PAlgebra<T> change_basis(const PAlgebra<T>& p, const Matrix<T>& basis) {
  const std::size_t n = p.dimension();
  if (basis.rows() != n || basis.cols() != n) throw ShapeMismatch("basis change must be n x n");
  const auto inv = inverse(basis);
  if (!inv) throw SingularMatrix("basis change matrix is singular");
  const Matrix<T>& bi = *inv;

  // c'(x, y, z) = sum B(u, x) B(v, y) c(u, v, w) B^-1(z, w)
  auto c = Tensor<T>::cube(n);
  auto s = Tensor<T>::cube(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        const T& cw = p.product()(u, v, w);
        const T& sw = p.coproduct()(u, v, w);
        if (is_zero(cw) && is_zero(sw)) continue;
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
              if (!is_zero(cw)) c(x, y, z) += basis(u, x) * basis(v, y) * cw * bi(z, w);
              // lambda(b_x) = sum B(u, x) s(u, v, w) old_v (x) old_w, old_v = sum B^-1(y, v) b_y
              if (!is_zero(sw)) s(x, y, z) += basis(u, x) * sw * bi(y, v) * bi(z, w);
            }
          }
        }
      }
  return PAlgebra<T>::create(std::move(c), std::move(s), p.label());
}

#define KPROJ_INSTANTIATE(T)                                                       \
  template struct AxiomReport<T>;                                                  \
  template AxiomReport<T> verify_axioms(const Tensor<T>&, const Tensor<T>&);       \
  template bool is_associative(const Tensor<T>&);                                  \
  template class PAlgebra<T>;                                                      \
  template Matrix<T> product_matrix(const Tensor<T>&);                             \
  template Matrix<T> coproduct_matrix(const Tensor<T>&);                           \
  template Matrix<T> mu_lambda_projector(const PAlgebra<T>&);                      \
  template OppositeDual<T> opposite_dual(const PAlgebra<T>&);                      \
  template PAlgebra<T> dual(const PAlgebra<T>&);                                   \
  template PAlgebra<T> change_basis(const PAlgebra<T>&, const Matrix<T>&);

KPROJ_INSTANTIATE(Rational)
KPROJ_INSTANTIATE(Complex)

#undef KPROJ_INSTANTIATE

}  // namespace kproj
