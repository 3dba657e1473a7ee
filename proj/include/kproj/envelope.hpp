#pragma once

#include <string>
#include <vector>

#include "kproj/p_algebra.hpp"

namespace kproj {

/// Generator images of a would-be representation: rho[i * n + j] is the
/// dim_w x dim_w matrix of e_i^j. dim_w may be 0.
template <Field T>
using GeneratorImages = std::vector<Matrix<T>>;

/// En(V): basis e_i^j at flat index i * n + j, product
/// e_j^l e_i^k = c_{ij}^t s_r^{kl} e_t^r.
template <Field T>
class EnvelopeAlgebra {
 public:
  const PAlgebra<T>& parent() const noexcept { return parent_; }
  std::size_t n() const noexcept { return parent_.dimension(); }
  std::size_t dimension() const noexcept { return n() * n(); }
  /// (x, y, z): coefficient of basis z in x * y.
  const Tensor<T>& product() const noexcept { return product_; }

  /// Left multiplication operators, a representation on En(V) itself.
  GeneratorImages<T> left_regular() const;

  template <Field U>
  friend EnvelopeAlgebra<U> envelope(const PAlgebra<U>& p);

 private:
  EnvelopeAlgebra(PAlgebra<T> p, Tensor<T> product) : parent_(std::move(p)), product_(std::move(product)) {}
  PAlgebra<T> parent_;
  Tensor<T> product_;
};

/// Builds En(V), checks associativity and that its left regular
/// representation satisfies the weak relations. A failure is an internal bug
/// and throws std::logic_error.
template <Field T>
EnvelopeAlgebra<T> envelope(const PAlgebra<T>& p);

/// One relation family checked as matrix identities on W. The witness holds
/// the 0-based free indices of the first failing identity.
struct FamilyCheck {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
};

struct RelationReport {
  std::vector<FamilyCheck> families;

  bool passed() const {
    for (const auto& f : families)
      if (!f.passed) return false;
    return true;
  }
  const FamilyCheck* first_failure() const {
    for (const auto& f : families)
      if (!f.passed) return &f;
    return nullptr;
  }
  /// Witnesses printed 1-based.
  std::string describe() const;
};

/// Throws ShapeMismatch unless rho holds n^2 square matrices of one size.
template <Field T>
std::size_t representation_dimension(const PAlgebra<T>& p, const GeneratorImages<T>& rho);

/// c_{rt}^k rho(e_j^t) rho(e_i^r) = c_{ij}^p rho(e_p^k), witness (i, j, k), and
/// s_i^{rt} rho(e_t^k) rho(e_r^j) = s_p^{jk} rho(e_i^p), witness (i, j, k).
template <Field T>
RelationReport check_weak_relations(const PAlgebra<T>& p, const GeneratorImages<T>& rho);

/// rho(e_j^l) rho(e_i^k) = c_{ij}^t s_r^{kl} rho(e_t^r), witness (j, l, i, k).
template <Field T>
RelationReport check_envelope_relation(const PAlgebra<T>& p, const GeneratorImages<T>& rho);

/// rho(e_j^l) rho(e_i^k) = c_{ij}^r s_r^{pt} rho(e_t^l) rho(e_p^k), witness (j, l, i, k).
template <Field T>
RelationReport check_zero_action_relation(const PAlgebra<T>& p, const GeneratorImages<T>& rho);

/// All products rho(a) rho(b), indexed a * n^2 + b.
template <Field T>
std::vector<Matrix<T>> pair_products(const GeneratorImages<T>& rho);

}  // namespace kproj
