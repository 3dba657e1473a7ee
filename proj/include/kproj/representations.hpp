#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kproj/envelope.hpp"

namespace kproj {

/// Nonnegative multiplicities, row-major.
using Multiplicities = std::vector<std::vector<std::size_t>>;

enum class RepresentationKind {
  envelope,  // satisfies the full envelope product
  weak,      // satisfies only the weak relations
};

/// Matrices rho(e_i^j) on W, validated on construction. dim W = 0 is allowed.
template <Field T>
class EnRepresentation {
 public:
  /// Throws RelationViolation when the envelope product is not respected.
  static EnRepresentation from_images(const PAlgebra<T>& p, GeneratorImages<T> images, std::string label = {});
  /// Throws RelationViolation when a weak relation fails.
  static EnRepresentation weak_from_images(const PAlgebra<T>& p, GeneratorImages<T> images,
                                           std::string label = {});
  /// Block-diagonal sum of `multiplicity` copies of each validated summand.
  static EnRepresentation direct_sum(const PAlgebra<T>& p,
                                     const std::vector<std::pair<const EnRepresentation*, std::size_t>>& parts,
                                     std::string label = {});
  /// Left regular representation of En(V).
  static EnRepresentation regular(const PAlgebra<T>& p);

  const PAlgebra<T>& algebra() const noexcept { return *algebra_; }
  std::size_t n() const noexcept { return algebra_->dimension(); }
  std::size_t dimension() const noexcept { return dim_w_; }
  RepresentationKind kind() const noexcept { return kind_; }
  const GeneratorImages<T>& images() const noexcept { return images_; }
  const Matrix<T>& image(std::size_t i, std::size_t j) const { return images_[i * n() + j]; }
  const std::optional<Multiplicities>& multiplicities() const noexcept { return multiplicities_; }
  const std::string& label() const noexcept { return label_; }

  EnRepresentation with_multiplicities(Multiplicities m) const {
    EnRepresentation r = *this;
    r.multiplicities_ = std::move(m);
    return r;
  }

 private:
  EnRepresentation(std::shared_ptr<const PAlgebra<T>> p, GeneratorImages<T> images, std::size_t dim_w,
                   RepresentationKind kind, std::string label)
      : algebra_(std::move(p)), images_(std::move(images)), dim_w_(dim_w), kind_(kind), label_(std::move(label)) {}

  std::shared_ptr<const PAlgebra<T>> algebra_;
  GeneratorImages<T> images_;
  std::size_t dim_w_ = 0;
  RepresentationKind kind_ = RepresentationKind::envelope;
  std::optional<Multiplicities> multiplicities_;
  std::string label_;
};

/// The one-dimensional module W_ij of an algebra built from a (0,1)-matrix r:
/// rho(e_x^y) = delta_{xi} r(j, y). Throws MissingMetadata.
template <Field T>
EnRepresentation<T> commutative_simple_module(const PAlgebra<T>& p, std::size_t i, std::size_t j);

/// W = sum of m(i, j) copies of W_ij. Throws MissingMetadata, ShapeMismatch,
/// DimensionOverflow.
template <Field T>
EnRepresentation<T> rep_from_multiplicities_commutative(const PAlgebra<T>& p, const Multiplicities& m);

/// The simple module L_alpha (x) M_beta of an algebra built from semisimple
/// data, of dimension k_alpha * m_beta. Throws MissingMetadata.
template <Field T>
EnRepresentation<T> semisimple_simple_module(const PAlgebra<T>& p, std::size_t alpha, std::size_t beta);

/// W = sum of m(alpha, beta) copies of L_alpha (x) M_beta; m is indexed by
/// L blocks, then M blocks. Throws MissingMetadata, ShapeMismatch,
/// DimensionOverflow.
template <Field T>
EnRepresentation<T> rep_from_multiplicities_semisimple(const PAlgebra<T>& p, const Multiplicities& m);

template <Field T>
EnRepresentation<T> rep_from_multiplicities_semisimple(const SemisimpleData<T>& d, const Multiplicities& m);

/// P: W (x) V -> V (x) W, P(w (x) e_i) = sum_j e_j (x) rho(e_i^j) w. Rows are
/// indexed j * dim W + w', columns w * n + i.
template <Field T>
class KProjector {
 public:
  const EnRepresentation<T>& representation() const noexcept { return rho_; }
  const Matrix<T>& matrix() const noexcept { return p_; }
  std::size_t n() const noexcept { return rho_.n(); }
  std::size_t dim_w() const noexcept { return rho_.dimension(); }

  template <Field U>
  friend KProjector<U> build_k_projector(const EnRepresentation<U>& rho);

 private:
  KProjector(EnRepresentation<T> rho, Matrix<T> p) : rho_(std::move(rho)), p_(std::move(p)) {}
  EnRepresentation<T> rho_;
  Matrix<T> p_;
};

/// Assembles P and checks both intertwining diagrams
/// (mu (x) 1)(1 (x) P)(P (x) 1) = P (1 (x) mu) and
/// (1 (x) P)(P (x) 1)(1 (x) lambda) = (lambda (x) 1) P.
/// Throws DiagramViolation, DimensionOverflow.
template <Field T>
KProjector<T> build_k_projector(const EnRepresentation<T>& rho);

template <Field T>
struct TensorSquareReport {
  std::size_t projector_rank = 0;         // rank of lambda o mu on V (x) V
  std::vector<std::vector<T>> v0_basis;   // basis of Im(Id - lambda o mu), coordinates (i, j) -> i * n + j
  bool intertwines = false;               // mu and lambda are module maps
  bool zero_action = false;               // W (x) W^* acts by zero on V0
  std::vector<std::size_t> witness;       // on failure: (V0 vector, k, l), 0-based
};

/// Never throws on a failed check; see the flags.
template <Field T>
TensorSquareReport<T> tensor_square_report(const KProjector<T>& k);

/// As tensor_square_report, but throws ZeroActionFails when V0 is not a zero
/// representation.
template <Field T>
TensorSquareReport<T> tensor_square_decomposition(const KProjector<T>& k);

/// Operators A_ab on V, A_ab(e_i) = sum_j rho(e_i^j)(b, a) e_j, indexed a * dim W + b.
template <Field T>
std::vector<Matrix<T>> action_operators(const KProjector<T>& k);

struct IrreducibilityReport {
  bool irreducible = false;
  std::size_t closure_dimension = 0;  // dimension of the algebra the A_ab generate
  std::optional<std::size_t> invariant_subspace_dimension;
};

/// Span closure of products of the A_ab; irreducible iff it is all of End(V).
template <Field T>
IrreducibilityReport irreducibility_report(const KProjector<T>& k);

template <Field T>
bool is_irreducible_action_on_V(const KProjector<T>& k) {
  return irreducibility_report(k).irreducible;
}

struct PerfectnessReport {
  bool perfect = false;
  bool zero_action = false;
  bool irreducible = false;
  std::size_t closure_dimension = 0;
  std::optional<std::size_t> invariant_subspace_dimension;
  /// "perfect", or the failing conditions.
  std::string reason;
};

template <Field T>
PerfectnessReport is_perfect(const KProjector<T>& k);

}  // namespace kproj
