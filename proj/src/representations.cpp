#include "kproj/representations.hpp"

#include "kproj/constructions.hpp"
#include "kproj/limits.hpp"

namespace kproj {

namespace {

template <Field T>
void require_images_within_cap(std::size_t n, std::size_t dim_w) {
  require_within_cap(saturating_mul(n * n, saturating_mul(dim_w, dim_w)), "representation");
}

std::string family_message(const RelationReport& r) {
  const auto* bad = r.first_failure();
  std::string out = bad->name + " fails at (";
  for (std::size_t k = 0; k < bad->witness.size(); ++k) out += (k ? "," : "") + std::to_string(bad->witness[k] + 1);
  return out + ")";
}

template <Field T>
const ZeroOneMatrix& zero_one_metadata(const PAlgebra<T>& p) {
  if (const auto* r = std::get_if<ZeroOneMatrix>(&p.recipe())) return *r;
  throw MissingMetadata("algebra carries no (0,1)-matrix recipe");
}

template <Field T>
SemisimpleData<T> semisimple_metadata(const PAlgebra<T>& p) {
  if (const auto* d = std::get_if<SemisimpleData<T>>(&p.recipe())) return *d;
  if (const auto* r = std::get_if<ZeroOneMatrix>(&p.recipe())) return SemisimpleData<T>::from_zero_one(*r);
  throw MissingMetadata("algebra carries no semisimple recipe");
}

void require_shape(const Multiplicities& m, std::size_t rows, std::size_t cols) {
  if (m.size() != rows) throw ShapeMismatch("multiplicity matrix has the wrong number of rows");
  for (const auto& row : m) {
    if (row.size() != cols) throw ShapeMismatch("multiplicity matrix has the wrong number of columns");
  }
}

template <Field T>
void add_scaled(Matrix<T>& acc, const T& w, const Matrix<T>& m) {
  if (is_zero(w)) return;
  for (std::size_t k = 0; k < m.data().size(); ++k) {
    const T& x = m.data()[k];
    if (!is_zero(x)) acc.data()[k] += w * x;
  }
}

}  // namespace

template <Field T>
EnRepresentation<T> EnRepresentation<T>::from_images(const PAlgebra<T>& p, GeneratorImages<T> images,
                                                     std::string label) {
  const std::size_t d = representation_dimension(p, images);
  require_images_within_cap<T>(p.dimension(), d);
  const auto report = check_envelope_relation(p, images);
  if (!report.passed()) throw RelationViolation(family_message(report));
  return EnRepresentation(std::make_shared<const PAlgebra<T>>(p), std::move(images), d,
                          RepresentationKind::envelope, std::move(label));
}

template <Field T>
EnRepresentation<T> EnRepresentation<T>::weak_from_images(const PAlgebra<T>& p, GeneratorImages<T> images,
                                                          std::string label) {
  const std::size_t d = representation_dimension(p, images);
  require_images_within_cap<T>(p.dimension(), d);
  const auto report = check_weak_relations(p, images);
  if (!report.passed()) throw RelationViolation(family_message(report));
  const auto kind = check_envelope_relation(p, images).passed() ? RepresentationKind::envelope
                                                                : RepresentationKind::weak;
  return EnRepresentation(std::make_shared<const PAlgebra<T>>(p), std::move(images), d, kind, std::move(label));
}

template <Field T>
EnRepresentation<T> EnRepresentation<T>::direct_sum(
    const PAlgebra<T>& p, const std::vector<std::pair<const EnRepresentation*, std::size_t>>& parts,
    std::string label) {
  const std::size_t n = p.dimension();
  std::size_t d = 0;
  auto kind = RepresentationKind::envelope;
  for (const auto& [rep, mult] : parts) {
    if (rep->n() != n || !(rep->algebra() == p)) throw ShapeMismatch("summand belongs to another algebra");
    d = saturating_mul(rep->dimension(), mult) + d;
    if (mult > 0 && rep->kind() == RepresentationKind::weak) kind = RepresentationKind::weak;
  }
  require_images_within_cap<T>(n, d);

  GeneratorImages<T> images(n * n, Matrix<T>(d, d));
  std::size_t off = 0;
  for (const auto& [rep, mult] : parts) {
    const std::size_t k = rep->dimension();
    for (std::size_t copy = 0; copy < mult; ++copy, off += k)
      for (std::size_t g = 0; g < n * n; ++g)
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) images[g](off + r, off + c) = rep->images_[g](r, c);
  }
  return EnRepresentation(std::make_shared<const PAlgebra<T>>(p), std::move(images), d, kind, std::move(label));
}

template <Field T>
EnRepresentation<T> EnRepresentation<T>::regular(const PAlgebra<T>& p) {
  return from_images(p, envelope(p).left_regular(), "regular");
}

template <Field T>
EnRepresentation<T> commutative_simple_module(const PAlgebra<T>& p, std::size_t i, std::size_t j) {
  const auto& r = zero_one_metadata(p);
  const std::size_t n = p.dimension();
  if (i >= n || j >= n) throw ShapeMismatch("simple module index out of range");
  GeneratorImages<T> images(n * n, Matrix<T>(1, 1));
  for (std::size_t y = 0; y < n; ++y) images[i * n + y](0, 0) = r.get(j, y) ? T(1) : T(0);
  return EnRepresentation<T>::from_images(p, std::move(images),
                                          "W(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

template <Field T>
EnRepresentation<T> rep_from_multiplicities_commutative(const PAlgebra<T>& p, const Multiplicities& m) {
  const std::size_t n = p.dimension();
  zero_one_metadata(p);
  require_shape(m, n, n);
  std::vector<EnRepresentation<T>> simples;
  std::vector<std::size_t> mults;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] == 0) continue;
      simples.push_back(commutative_simple_module(p, i, j));
      mults.push_back(m[i][j]);
    }
  std::vector<std::pair<const EnRepresentation<T>*, std::size_t>> parts;
  for (std::size_t k = 0; k < simples.size(); ++k) parts.emplace_back(&simples[k], mults[k]);
  return EnRepresentation<T>::direct_sum(p, parts, "commutative").with_multiplicities(m);
}

template <Field T>
EnRepresentation<T> semisimple_simple_module(const PAlgebra<T>& p, std::size_t alpha, std::size_t beta) {
  const auto d = semisimple_metadata(p);
  if (alpha >= d.l_dims.size() || beta >= d.m_dims.size()) throw ShapeMismatch("simple module index out of range");
  const Matrix<T> q = d.assemble_q();
  const std::size_t n = p.dimension();
  const std::size_t k = d.l_dims[alpha], m = d.m_dims[beta];
  const std::size_t l_off = d.l_offset(alpha), m_off = d.m_offset(beta);

  // rho(e_x^y) = L(y)^T (x) M(x)^T with M(x) the matrix unit of b_x inside
  // block beta and L(y)(i, j) = Q(y, a(alpha, i, j)).
  GeneratorImages<T> images(n * n, Matrix<T>(k * m, k * m));
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t u = 0; u < m; ++u) {
      const std::size_t x = m_off + t * m + u;
      Matrix<T> mx(m, m);
      mx(u, t) = T(1);
      for (std::size_t y = 0; y < n; ++y) {
        Matrix<T> ly(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) ly(j, i) = q(y, l_off + i * k + j);
        images[x * n + y] = kron(ly, mx);
      }
    }
  return EnRepresentation<T>::from_images(p, std::move(images),
                                          "S(" + std::to_string(alpha + 1) + "," + std::to_string(beta + 1) + ")");
}

template <Field T>
EnRepresentation<T> rep_from_multiplicities_semisimple(const PAlgebra<T>& p, const Multiplicities& m) {
  const auto d = semisimple_metadata(p);
  require_shape(m, d.l_dims.size(), d.m_dims.size());
  std::size_t dim_w = 0;
  for (std::size_t a = 0; a < d.l_dims.size(); ++a)
    for (std::size_t b = 0; b < d.m_dims.size(); ++b)
      dim_w = saturating_mul(m[a][b], d.l_dims[a] * d.m_dims[b]) + dim_w;
  require_images_within_cap<T>(p.dimension(), dim_w);

  std::vector<EnRepresentation<T>> simples;
  std::vector<std::size_t> mults;
  for (std::size_t a = 0; a < d.l_dims.size(); ++a)
    for (std::size_t b = 0; b < d.m_dims.size(); ++b) {
      if (m[a][b] == 0) continue;
      simples.push_back(semisimple_simple_module(p, a, b));
      mults.push_back(m[a][b]);
    }
  std::vector<std::pair<const EnRepresentation<T>*, std::size_t>> parts;
  for (std::size_t k = 0; k < simples.size(); ++k) parts.emplace_back(&simples[k], mults[k]);
  return EnRepresentation<T>::direct_sum(p, parts, "semisimple").with_multiplicities(m);
}

template <Field T>
EnRepresentation<T> rep_from_multiplicities_semisimple(const SemisimpleData<T>& d, const Multiplicities& m) {
  return rep_from_multiplicities_semisimple(from_semisimple_data(d), m);
}

template <Field T>
KProjector<T> build_k_projector(const EnRepresentation<T>& rho) {
  const std::size_t n = rho.n(), d = rho.dimension();
  require_within_cap(saturating_mul(n * d, n * d), "K-projector");
  Matrix<T> p(n * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix<T>& g = rho.image(i, j);
      for (std::size_t w = 0; w < d; ++w)
        for (std::size_t w2 = 0; w2 < d; ++w2) p(j * d + w2, w * n + i) = g(w2, w);
    }

  // On the block of W (x) e_i (x) e_j -> e_k (x) e_l (x) W the composite
  // (1 (x) P)(P (x) 1) is rho(e_j^l) rho(e_i^k); composing with mu or lambda
  // gives the two weak relation families.
  const auto report = check_weak_relations(rho.algebra(), rho.images());
  if (!report.passed()) {
    const auto* bad = report.first_failure();
    const std::string which = bad == &report.families[0] ? "mu diagram" : "lambda diagram";
    std::string w;
    for (std::size_t k = 0; k < bad->witness.size(); ++k) w += (k ? "," : "") + std::to_string(bad->witness[k] + 1);
    throw DiagramViolation(which + " fails at (" + w + ")");
  }
  return KProjector<T>(rho, std::move(p));
}

template <Field T>
TensorSquareReport<T> tensor_square_report(const KProjector<T>& k) {
  const auto& rho = k.representation();
  const auto& alg = rho.algebra();
  const std::size_t n = k.n(), d = k.dim_w(), n2 = n * n;

  TensorSquareReport<T> out;
  const Matrix<T> pi = mu_lambda_projector(alg);
  out.projector_rank = rank(pi);
  out.v0_basis = column_space(Matrix<T>(Matrix<T>::identity(n2) - pi));
  out.intertwines = check_weak_relations(alg, rho.images()).passed();

  out.zero_action = true;
  if (d == 0) return out;
  const auto pp = pair_products(rho.images());
  for (std::size_t v = 0; v < out.v0_basis.size() && out.zero_action; ++v) {
    const auto& u = out.v0_basis[v];
    for (std::size_t kk = 0; kk < n && out.zero_action; ++kk)
      for (std::size_t l = 0; l < n && out.zero_action; ++l) {
        Matrix<T> acc(d, d);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) add_scaled(acc, u[i * n + j], pp[(j * n + l) * n2 + i * n + kk]);
        if (!is_zero_matrix(acc)) {
          out.zero_action = false;
          out.witness = {v, kk, l};
        }
      }
  }
  return out;
}

template <Field T>
TensorSquareReport<T> tensor_square_decomposition(const KProjector<T>& k) {
  auto out = tensor_square_report(k);
  if (!out.zero_action) {
    throw ZeroActionFails("V0 vector " + std::to_string(out.witness[0] + 1) + " is moved into component (" +
                          std::to_string(out.witness[1] + 1) + "," + std::to_string(out.witness[2] + 1) + ")");
  }
  return out;
}

template <Field T>
std::vector<Matrix<T>> action_operators(const KProjector<T>& k) {
  const std::size_t n = k.n(), d = k.dim_w();
  std::vector<Matrix<T>> ops(d * d, Matrix<T>(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix<T>& g = k.representation().image(i, j);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) ops[a * d + b](j, i) = g(b, a);
    }
  return ops;
}

namespace {

template <Field T>
std::size_t image_dimension(const std::vector<Matrix<T>>& algebra, const std::vector<T>* v, std::size_t n) {
  SpanBasis<T> span(n);
  for (const auto& a : algebra) {
    if (v == nullptr) {
      for (std::size_t c = 0; c < n; ++c) span.insert(column(a, c));
    } else {
      std::vector<T> w(n, T(0));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) w[r] += a(r, c) * (*v)[c];
      span.insert(std::move(w));
    }
  }
  return span.size();
}

template <Field T>
std::optional<std::size_t> invariant_subspace(const std::vector<Matrix<T>>& algebra, std::size_t n) {
  auto proper = [n](std::size_t k) { return k > 0 && k < n; };
  const std::size_t jv = image_dimension<T>(algebra, nullptr, n);
  if (jv == 0) return n > 1 ? std::optional<std::size_t>(1) : std::nullopt;
  if (proper(jv)) return jv;

  Matrix<T> stacked(algebra.size() * n, n);
  for (std::size_t m = 0; m < algebra.size(); ++m)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(m * n + r, c) = algebra[m](r, c);
  const std::size_t kernel = n - rank(stacked);
  if (proper(kernel)) return kernel;

  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<T> v(n, T(k == n ? 1 : 0));
    if (k < n) v[k] = T(1);
    const std::size_t dim = image_dimension(algebra, &v, n);
    if (proper(dim)) return dim;
  }
  return std::nullopt;
}

}  // namespace

template <Field T>
IrreducibilityReport irreducibility_report(const KProjector<T>& k) {
  const std::size_t n = k.n();
  SpanBasis<T> gens(n * n);
  for (const auto& a : action_operators(k)) gens.insert(flatten(a));
  std::vector<Matrix<T>> g;
  for (const auto& v : gens.vectors()) g.emplace_back(n, n, v);

  // Words in the generators: left-multiply every new element by each generator.
  SpanBasis<T> closure(n * n);
  std::vector<Matrix<T>> elements, queue;
  for (const auto& m : g) {
    if (closure.insert(flatten(m))) queue.push_back(m);
  }
  while (!queue.empty() && !closure.full()) {
    Matrix<T> x = std::move(queue.back());
    queue.pop_back();
    elements.push_back(x);
    for (const auto& gen : g) {
      Matrix<T> y = gen * x;
      if (closure.insert(flatten(y))) queue.push_back(std::move(y));
    }
  }

  IrreducibilityReport out;
  out.closure_dimension = closure.size();
  out.irreducible = closure.full();
  if (!out.irreducible) {
    std::vector<Matrix<T>> basis;
    for (const auto& v : closure.vectors()) basis.emplace_back(n, n, v);
    out.invariant_subspace_dimension = invariant_subspace(basis, n);
  }
  return out;
}

template <Field T>
PerfectnessReport is_perfect(const KProjector<T>& k) {
  const auto square = tensor_square_report(k);
  const auto irr = irreducibility_report(k);
  PerfectnessReport out;
  out.zero_action = square.zero_action;
  out.irreducible = irr.irreducible;
  out.closure_dimension = irr.closure_dimension;
  out.invariant_subspace_dimension = irr.invariant_subspace_dimension;
  out.perfect = out.zero_action && out.irreducible;
  if (out.perfect) {
    out.reason = "perfect";
  } else if (!out.zero_action && !out.irreducible) {
    out.reason = "zero action fails; V reducible";
  } else {
    out.reason = out.zero_action ? "V reducible" : "zero action fails";
  }
  return out;
}

#define KPROJ_INSTANTIATE(T)                                                                              \
  template class EnRepresentation<T>;                                                                     \
  template EnRepresentation<T> commutative_simple_module(const PAlgebra<T>&, std::size_t, std::size_t);   \
  template EnRepresentation<T> rep_from_multiplicities_commutative(const PAlgebra<T>&, const Multiplicities&); \
  template EnRepresentation<T> semisimple_simple_module(const PAlgebra<T>&, std::size_t, std::size_t);    \
  template EnRepresentation<T> rep_from_multiplicities_semisimple(const PAlgebra<T>&, const Multiplicities&); \
  template EnRepresentation<T> rep_from_multiplicities_semisimple(const SemisimpleData<T>&,               \
                                                                  const Multiplicities&);                 \
  template class KProjector<T>;                                                                           \
  template KProjector<T> build_k_projector(const EnRepresentation<T>&);                                   \
  template struct TensorSquareReport<T>;                                                                  \
  template TensorSquareReport<T> tensor_square_report(const KProjector<T>&);                              \
  template TensorSquareReport<T> tensor_square_decomposition(const KProjector<T>&);                       \
  template std::vector<Matrix<T>> action_operators(const KProjector<T>&);                                 \
  template IrreducibilityReport irreducibility_report(const KProjector<T>&);                              \
  template PerfectnessReport is_perfect(const KProjector<T>&);

KPROJ_INSTANTIATE(Rational)
KPROJ_INSTANTIATE(Complex)

#undef KPROJ_INSTANTIATE

}  // namespace kproj
