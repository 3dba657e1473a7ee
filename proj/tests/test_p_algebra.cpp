#include <gtest/gtest.h>

#include "kproj/constructions.hpp"
#include "support/fixtures.hpp"

using namespace kproj;
using namespace kproj::testing;

TEST(PAlgebra, ExampleOneProductsAreValid) {
  for (int k = 1; k <= 4; ++k) {
    const auto report = verify_axioms(example1_product(k), diagonal_coproduct(2));
    EXPECT_TRUE(report.all_passed()) << k << "\n" << report.describe();
  }
}

TEST(PAlgebra, OneDimensional) {
  Tensor<Q> c({1, 1, 1}), s({1, 1, 1});
  c(0, 0, 0) = Q(1);
  s(0, 0, 0) = Q(1);
  const auto p = PAlgebra<Q>::create(c, s);
  EXPECT_EQ(p.dimension(), 1u);
  EXPECT_EQ(mu_lambda_projector(p), Matrix<Q>::identity(1));
}

TEST(PAlgebra, LeftProjectionProductWithSkewCoproductIsValid) {
  // e_i e_j = e_i together with lambda(e1) = e1 (x) e2, lambda(e2) = e2 (x) e2.
  auto s = Tensor<Q>::cube(2);
  s(0, 0, 1) = Q(1);
  s(1, 1, 1) = Q(1);
  EXPECT_TRUE(verify_axioms(example1_product(3), s).all_passed());
}

TEST(PAlgebra, SectionFailureCarriesWitness) {
  auto s = Tensor<Q>::cube(2);
  s(0, 0, 1) = Q(1);
  s(1, 1, 1) = Q(1);
  const auto report = verify_axioms(example1_product(1), s);
  EXPECT_TRUE(report.get(Relation::associativity).passed);
  const auto& sec = report.get(Relation::section);
  ASSERT_FALSE(sec.passed);
  EXPECT_EQ(sec.witness, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(sec.lhs, Q(0));
  EXPECT_EQ(sec.rhs, Q(1));
  try {
    PAlgebra<Q>::create(example1_product(1), s);
    FAIL();
  } catch (const AxiomViolation& e) {
    EXPECT_NE(std::string(e.what()).find("section fails at (1,1)"), std::string::npos) << e.what();
  }
}

TEST(PAlgebra, AllOnesTensors) {
  auto c = Tensor<Q>::cube(2), s = Tensor<Q>::cube(2);
  for (auto& x : c.data()) x = Q(1);
  for (auto& x : s.data()) x = Q(1);
  const auto report = verify_axioms(c, s);
  EXPECT_TRUE(report.get(Relation::associativity).passed);
  EXPECT_TRUE(report.get(Relation::coassociativity).passed);
  EXPECT_FALSE(report.get(Relation::section).passed);
  EXPECT_EQ(report.get(Relation::section).lhs, Q(4));
}

// All-ones c gives e_i e_j = e_1 + e_2, so (e_i e_j) e_k = 2(e_1 + e_2) on
// both sides: associative after all. Checked against a direct index loop.
TEST(PAlgebra, AssociativityMatchesIndexLoop) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.index(3);
    auto c = Tensor<Q>::cube(n);
    for (auto& x : c.data()) x = Q(rng.integer(0, 1));
    bool assoc = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t t = 0; t < n; ++t) {
            Q l(0), r(0);
            for (std::size_t q = 0; q < n; ++q) {
              l += c(i, j, q) * c(q, k, t);
              r += c(i, q, t) * c(j, k, q);
            }
            assoc = assoc && l == r;
          }
    EXPECT_EQ(is_associative(c), assoc);
  }
}

TEST(PAlgebra, RejectsMismatchedShapes) {
  EXPECT_THROW(verify_axioms(Tensor<Q>::cube(2), Tensor<Q>::cube(3)), ShapeMismatch);
  EXPECT_THROW(verify_axioms(Tensor<Q>({2, 2}), Tensor<Q>({2, 2})), ShapeMismatch);
}

TEST(PAlgebra, MuLambdaProjectorForDiagonalCase) {
  const auto pi = mu_lambda_projector(example1(1));
  Matrix<Q> expect(4, 4);
  expect(0, 0) = Q(1);
  expect(3, 3) = Q(1);
  EXPECT_EQ(pi, expect);
}

TEST(PAlgebra, MuLambdaIsProjectorOfTraceN) {
  Rng rng(22);
  std::vector<PAlgebra<Q>> algebras;
  for (int k = 1; k <= 4; ++k) algebras.push_back(example1(k));
  for (int t = 0; t < 10; ++t) algebras.push_back(from_zero_one_matrix<Q>(rng.nonsingular_zero_one(1 + rng.index(4))));
  for (int t = 0; t < 5; ++t) algebras.push_back(from_semisimple_data(rng.semisimple(5)));
  for (const auto& p : algebras) {
    const auto pi = mu_lambda_projector(p);
    EXPECT_TRUE(is_idempotent(pi));
    EXPECT_EQ(trace(pi), Q(static_cast<long>(p.dimension())));
    EXPECT_EQ(rank(pi), p.dimension());
  }
}

TEST(PAlgebra, DualIsPAlgebra) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const auto p = from_zero_one_matrix<Q>(rng.nonsingular_zero_one(1 + rng.index(4)));
    const auto d = dual(p);
    EXPECT_TRUE(verify_axioms(d.product(), d.coproduct()).all_passed());
    EXPECT_EQ(dual(d), p);
  }
}

TEST(PAlgebra, OppositeOfCommutativeIsItself) {
  const auto od = opposite_dual(example1(2));
  EXPECT_EQ(od.op_product, example1_product(2));
}

TEST(PAlgebra, OppositeOfMatrixAlgebraSwapsArguments) {
  const auto units = example5_block(qm({{1, 2}, {3, 4}}), qm({{1, 1}, {0, 1}}));
  const auto p = from_idempotent_basis(units);
  const auto od = opposite_dual(p);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Matrix<Q> combo(2, 2);
      for (std::size_t g = 0; g < 4; ++g) combo += units.matrices[g] * Q(od.op_product(a, b, g));
      EXPECT_EQ(combo, units.matrices[b] * units.matrices[a]);
    }
}

TEST(PAlgebra, ChangeBasisPreservesAxioms) {
  Rng rng(24);
  for (int t = 0; t < 20; ++t) {
    const auto p = from_zero_one_matrix<Q>(rng.nonsingular_zero_one(1 + rng.index(3)));
    const auto b = rng.invertible(p.dimension());
    const auto q = change_basis(p, b);
    EXPECT_EQ(change_basis(q, *inverse(b)), p);
  }
  EXPECT_THROW(change_basis(example1(1), qm({{1, 1}, {1, 1}})), SingularMatrix);
}

TEST(PAlgebra, TriangularZeroOneMatchesSecondProductInItsCoproductBasis) {
  // e1 = f1 + f2, e2 = f2: rewrite in the e basis.
  const auto p = from_zero_one_matrix<Q>(zo({{1, 1}, {0, 1}}));
  const auto q = change_basis(p, qm({{1, 0}, {1, 1}}));
  EXPECT_EQ(q.product(), example1_product(2));
  EXPECT_EQ(q.coproduct(), diagonal_coproduct(2));
}

// Every (0,1)-valued product on span(e1, e2) that forms a P-algebra with the
// diagonal coproduct, counted raw and up to swapping e1 and e2.
TEST(PAlgebraSearch, ExampleOneProductsAreComplete) {
  auto swap_labels = [](const Tensor<Q>& c) {
    auto out = Tensor<Q>::cube(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) out(1 - i, 1 - j, 1 - k) = c(i, j, k);
    return out;
  };
  std::vector<Tensor<Q>> found;
  for (unsigned bits = 0; bits < 256; ++bits) {
    auto c = Tensor<Q>::cube(2);
    for (std::size_t k = 0; k < 8; ++k) c(k / 4, (k / 2) % 2, k % 2) = Q((bits >> k) & 1U);
    if (verify_axioms(c, diagonal_coproduct(2)).all_passed()) found.push_back(c);
  }
  EXPECT_EQ(found.size(), 5u);
  for (const auto& c : found) {
    int matches = 0;
    for (int k = 1; k <= 4; ++k) matches += (c == example1_product(k) || swap_labels(c) == example1_product(k));
    EXPECT_EQ(matches, 1);
  }
  for (int k = 1; k <= 4; ++k) {
    EXPECT_NE(std::find(found.begin(), found.end(), example1_product(k)), found.end()) << k;
  }
}
