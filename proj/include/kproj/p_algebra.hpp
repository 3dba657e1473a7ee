#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kproj/matrix.hpp"
#include "kproj/recipes.hpp"
#include "kproj/tensor.hpp"

namespace kproj {

enum class Relation { associativity, coassociativity, section };

std::string_view relation_name(Relation r);

/// Outcome of one structure relation. On failure `witness` holds the
/// lexicographically first violating index tuple (0-based; (i,j,k,t) for the
/// two associativity laws, (i,j) for the section identity) and both sides.
template <Field T>
struct RelationCheck {
  Relation relation;
  bool passed = true;
  std::vector<std::size_t> witness;
  T lhs{0};
  T rhs{0};
};

template <Field T>
struct AxiomReport {
  std::array<RelationCheck<T>, 3> checks;

  bool all_passed() const {
    return checks[0].passed && checks[1].passed && checks[2].passed;
  }
  const RelationCheck<T>& get(Relation r) const { return checks[static_cast<std::size_t>(r)]; }
  const RelationCheck<T>* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
  std::string describe() const;
};

/// Checks associativity of c, coassociativity of s and s_i^{rt} c_{rt}^j = delta_i^j.
/// c(i, j, k) is the coefficient of e_k in e_i e_j; s(i, j, k) that of
/// e_j (x) e_k in lambda(e_i). Throws ShapeMismatch unless both are n x n x n.
template <Field T>
AxiomReport<T> verify_axioms(const Tensor<T>& c, const Tensor<T>& s);

/// True when c(i, j, k) defines an associative product.
template <Field T>
bool is_associative(const Tensor<T>& c);

struct PAlgebraTestAccess;

/// A finite-dimensional vector space with an associative product and a
/// coassociative coproduct whose composition mu o lambda is the identity.
/// Instances are always validated.
template <Field T>
class PAlgebra {
 public:
  /// Validates every relation; throws AxiomViolation with the first witness.
  static PAlgebra create(Tensor<T> product, Tensor<T> coproduct, std::string label = {},
                         Recipe<T> recipe = {});

  std::size_t dimension() const noexcept { return n_; }
  const Tensor<T>& product() const noexcept { return c_; }
  const Tensor<T>& coproduct() const noexcept { return s_; }
  const std::string& label() const noexcept { return label_; }
  const Recipe<T>& recipe() const noexcept { return recipe_; }

  PAlgebra with_label(std::string label) const {
    PAlgebra p = *this;
    p.label_ = std::move(label);
    return p;
  }

  friend bool operator==(const PAlgebra& a, const PAlgebra& b) { return a.c_ == b.c_ && a.s_ == b.s_; }

 private:
  friend struct PAlgebraTestAccess;
  PAlgebra(Tensor<T> c, Tensor<T> s, std::string label, Recipe<T> recipe);

  std::size_t n_ = 0;
  Tensor<T> c_;
  Tensor<T> s_;
  std::string label_;
  Recipe<T> recipe_;
};

/// mu as an n x n^2 matrix: column (i, j), row k.
template <Field T>
Matrix<T> product_matrix(const Tensor<T>& c);
/// lambda as an n^2 x n matrix: column i, row (j, k).
template <Field T>
Matrix<T> coproduct_matrix(const Tensor<T>& s);

/// lambda o mu on V (x) V; idempotent with trace n.
template <Field T>
Matrix<T> mu_lambda_projector(const PAlgebra<T>& p);

/// Structure tensors of the opposite product on V and of the opposite of the
/// dual product lambda^* on V^*; both verified associative.
template <Field T>
struct OppositeDual {
  Tensor<T> op_product;       // (i, j, k): e_k in e_j e_i
  Tensor<T> op_dual_product;  // (a, b, r): e^r in lambda^*(e^b (x) e^a)
};

template <Field T>
OppositeDual<T> opposite_dual(const PAlgebra<T>& p);

/// The P-algebra on V^* with product lambda^* and coproduct mu^*.
template <Field T>
PAlgebra<T> dual(const PAlgebra<T>& p);

/// Rewrites the structure tensors in a new basis; column x of `basis` holds
/// the old coordinates of new basis vector x. Throws SingularMatrix.
template <Field T>
PAlgebra<T> change_basis(const PAlgebra<T>& p, const Matrix<T>& basis);

extern template class PAlgebra<Rational>;
extern template class PAlgebra<Complex>;

}  // namespace kproj
