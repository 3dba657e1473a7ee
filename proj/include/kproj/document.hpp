#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kproj/p_algebra.hpp"
#include "kproj/representations.hpp"

namespace kproj {

inline constexpr std::string_view document_format = "kproj/1";

/// On-disk form of a P-algebra. Tensors are stored unchecked so that broken
/// inputs can still be loaded and verified.
///
/// JSON layout: {"format": "kproj/1", "backend": "exact"|"float", "n": n,
/// "product": [[i, j, k, v], ...], "coproduct": [[i, j, k, v], ...], ...}
/// with 1-based indices and only nonzero entries listed. Exact values are
/// strings "p/q"; float values are numbers or [re, im] with an "epsilon"
/// field. Optional: "label", "metadata" (recipe data), "multiplicities".
template <Field T>
struct AlgebraDocument {
  Tensor<T> product;
  Tensor<T> coproduct;
  std::string label;
  Recipe<T> recipe;
  std::optional<Multiplicities> multiplicities;
  std::optional<double> epsilon;

  std::size_t n() const { return product.shape()[0]; }
};

/// Backend tag of a document. Throws ParseError.
Backend document_backend(std::string_view text);

/// Exact documents may be read into either backend; float documents only
/// into the float backend. Throws ParseError.
template <Field T>
AlgebraDocument<T> parse_document(std::string_view text);

template <Field T>
std::string serialize_document(const AlgebraDocument<T>& doc);

template <Field T>
AlgebraDocument<T> document_from_algebra(const PAlgebra<T>& p);

/// Throws AxiomViolation, ShapeMismatch.
template <Field T>
PAlgebra<T> algebra_from_document(const AlgebraDocument<T>& doc);

/// Construction parameters as a JSON object: the recipe's metadata fields.
///   zero-one:          {"r": ["10", "01"]} or {"r": [[1, 0], [0, 1]]}
///   semisimple:        {"l_dims": [...], "m_dims": [...], "q_bar": [[block, ...], ...]}
///                      or "q" with the full matrix instead of "q_bar"
///   idempotent-basis:  {"mode": "example3"|"example4", "matrices": [...]}
///                      or {"a": matrix, "b": matrix} for an Example-5 block
/// Throws ParseError and the constructor's errors.
template <Field T>
PAlgebra<T> construct_from_params(std::string_view recipe, std::string_view params);

/// "1,0;0,1": rows separated by ';', entries by ','. Throws ParseError.
Multiplicities parse_multiplicities(std::string_view text);

std::string format_multiplicities(const Multiplicities& m);

}  // namespace kproj
