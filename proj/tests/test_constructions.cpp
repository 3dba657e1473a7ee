#include <gtest/gtest.h>

#include "kproj/constructions.hpp"
#include "support/oracles.hpp"

using namespace kproj;
using namespace kproj::testing;

TEST(ZeroOneRecipe, IdentityGivesDiagonalAlgebra) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto p = from_zero_one_matrix<Q>(ZeroOneMatrix::identity(n));
    EXPECT_EQ(p.coproduct(), diagonal_coproduct(n));
    EXPECT_EQ(p.product(), diagonal_coproduct(n));
  }
  EXPECT_EQ(from_zero_one_matrix<Q>(ZeroOneMatrix::identity(2)), example1(1));
}

TEST(ZeroOneRecipe, KeepsMatrixAsRecipe) {
  const auto r = zo({{1, 1}, {0, 1}});
  const auto p = from_zero_one_matrix<Q>(r);
  ASSERT_TRUE(std::holds_alternative<ZeroOneMatrix>(p.recipe()));
  EXPECT_EQ(std::get<ZeroOneMatrix>(p.recipe()), r);
}

TEST(ZeroOneRecipe, EveryNonsingularMatrixUpToThreeIsValid) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned long bits = 0; bits < (1UL << (n * n)); ++bits) {
      std::string s;
      for (std::size_t k = 0; k < n * n; ++k) s += (bits >> (n * n - 1 - k)) & 1 ? '1' : '0';
      const auto r = ZeroOneMatrix::from_bitstring(s);
      if (r.is_nonsingular()) {
        EXPECT_NO_THROW(from_zero_one_matrix<Q>(r)) << s;
      } else {
        EXPECT_THROW(from_zero_one_matrix<Q>(r), SingularMatrix) << s;
      }
    }
  }
}

TEST(ZeroOneRecipe, SingularPerturbationIsRejected) {
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng.index(3);
    auto r = rng.nonsingular_zero_one(n);
    EXPECT_NO_THROW(from_zero_one_matrix<Q>(r));
    // Copy row 0 onto row 1 one entry at a time; the last step makes it singular.
    for (std::size_t c = 0; c < n; ++c) r.set(1, c, r.get(0, c));
    EXPECT_THROW(from_zero_one_matrix<Q>(r), SingularMatrix);
  }
}

TEST(ZeroOneRecipe, FloatBackendAgrees) {
  const auto r = zo({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  const auto exact = from_zero_one_matrix<Q>(r);
  const auto fl = from_zero_one_matrix<Complex>(r);
  for (std::size_t k = 0; k < exact.coproduct().size(); ++k) {
    EXPECT_NEAR(std::abs(fl.coproduct().data()[k] - Complex(exact.coproduct().data()[k].get_d(), 0)), 0.0, 1e-12);
  }
}

TEST(SemisimpleRecipe, OneDimensionalBlocksReduceToZeroOne) {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    const auto r = rng.nonsingular_zero_one(1 + rng.index(4));
    const auto a = from_semisimple_data(SemisimpleData<Q>::from_zero_one(r));
    const auto b = from_zero_one_matrix<Q>(r);
    EXPECT_EQ(a.product(), b.product());
    EXPECT_EQ(a.coproduct(), b.coproduct());
  }
}

TEST(SemisimpleRecipe, IdentityWiringIsNotAProjectorForMatrixBlocks) {
  // Q the identity map L (x) L^* -> M (x) M^* with dim 2: Q-bar = v v^T, Q-bar^2 = 2 Q-bar.
  auto d = SemisimpleData<Q>::from_q({2}, {2}, Matrix<Q>::identity(4));
  EXPECT_EQ(d.q_bar[0][0] * d.q_bar[0][0], d.q_bar[0][0] * Q(2));
  EXPECT_THROW(from_semisimple_data(d), QBarNotProjector);
  // With dim 1 the identity wiring is a projector.
  EXPECT_NO_THROW(from_semisimple_data(SemisimpleData<Q>::from_q({1}, {1}, Matrix<Q>::identity(1))));
}

TEST(SemisimpleRecipe, IdentityQBarGivesSingularQ) {
  SemisimpleData<Q> d{{2}, {2}, {{Matrix<Q>::identity(4)}}};
  EXPECT_THROW(from_semisimple_data(d), QNotInvertible);
}

TEST(SemisimpleRecipe, ExampleFiveBlockAsQBar) {
  const auto basis = example5_block(qm({{1, 2}, {3, 4}}), qm({{1, 1}, {0, 1}}));
  const auto d = semisimple_from_block_basis(basis);
  const auto p = from_semisimple_data(d);
  EXPECT_EQ(p.dimension(), 4u);
  EXPECT_EQ(semisimple_mu_lambda(d), Matrix<Q>::identity(4));
}

TEST(SemisimpleRecipe, ShapeErrors) {
  SemisimpleData<Q> unbalanced{{2}, {1, 1}, {{Matrix<Q>(2, 2), Matrix<Q>(2, 2)}}};
  EXPECT_THROW(from_semisimple_data(unbalanced), DimensionMismatch);
  SemisimpleData<Q> wrong_block{{1}, {1}, {{Matrix<Q>(2, 2)}}};
  EXPECT_THROW(from_semisimple_data(wrong_block), DimensionMismatch);
}

TEST(SemisimpleRecipe, ZeroBlocksAreAccepted) {
  // Two one-dimensional blocks each side with Q a permutation: off-diagonal Q-bar blocks are 0.
  const auto d = SemisimpleData<Q>::from_q({1, 1}, {1, 1}, qm({{0, 1}, {1, 0}}));
  EXPECT_NO_THROW(from_semisimple_data(d));
}

TEST(SemisimpleRecipe, SucceedsIffBlocksAreProjectors) {
  Rng rng(33);
  int accepted = 0, rejected = 0;
  for (int t = 0; t < 120; ++t) {
    auto d = rng.semisimple(9);
    if (t % 2 == 1) {
      // Replace one block by a random matrix, keeping Q invertible when possible.
      const std::size_t a = rng.index(d.l_dims.size()), b = rng.index(d.m_dims.size());
      const std::size_t k = d.l_dims[a] * d.m_dims[b];
      d.q_bar[a][b] = rng.matrix(k, k);
      if (!inverse(d.assemble_q())) continue;
    }
    const bool projectors = all_q_bar_idempotent(d);
    const bool identity = semisimple_mu_lambda(d) == Matrix<Q>::identity(d.total_dimension());
    EXPECT_EQ(projectors, identity);
    try {
      const auto p = from_semisimple_data(d);
      EXPECT_TRUE(projectors);
      EXPECT_TRUE(verify_axioms(p.product(), p.coproduct()).all_passed());
      ++accepted;
    } catch (const QBarNotProjector&) {
      EXPECT_FALSE(projectors);
      ++rejected;
    }
  }
  EXPECT_GT(accepted, 20);
  EXPECT_GT(rejected, 20);
}

TEST(IdempotentBasisRecipe, ExampleTwoFirstFamily) {
  const IdempotentBasis<Q> b{
      2, BasisMode::example3,
      {qm({{1, 0}, {0, 1}}), qm({{1, 0}, {0, 0}}), qm({{0, 0}, {1, 1}}), qm({{0, 1}, {0, 1}})}};
  const auto p = from_idempotent_basis(b);
  EXPECT_EQ(p.coproduct(), diagonal_coproduct(4));
  // e3 e4 = [[0,0],[1,1]] [[0,1],[0,1]] = [[0,0],[0,2]] = 2 e1 - 2 e2.
  EXPECT_EQ(p.product()(2, 3, 0), Q(2));
  EXPECT_EQ(p.product()(2, 3, 1), Q(-2));
  EXPECT_EQ(p.product()(2, 3, 2), Q(0));
  EXPECT_EQ(p.product()(2, 3, 3), Q(0));
}

TEST(IdempotentBasisRecipe, ExampleTwoSecondFamilyWithRationalPoints) {
  // a(1 - a) = bc at rational points.
  const IdempotentBasis<Q> b{
      2, BasisMode::example3,
      {qm({{1, 0}, {0, 0}}), qm({{0, 0}, {1, 1}}), qm({{0, 1}, {0, 1}}), qm({{2, 2}, {-1, -1}})}};
  EXPECT_NO_THROW(from_idempotent_basis(b));
}

TEST(IdempotentBasisRecipe, TrivialOneDimensional) {
  const auto p = from_idempotent_basis(IdempotentBasis<Q>{1, BasisMode::example3, {qm({{1}})}});
  EXPECT_EQ(p.dimension(), 1u);
  EXPECT_EQ(p.product()(0, 0, 0), Q(1));
}

TEST(IdempotentBasisRecipe, Errors) {
  const IdempotentBasis<Q> dependent{
      2, BasisMode::example3,
      {qm({{1, 0}, {0, 1}}), qm({{1, 0}, {0, 0}}), qm({{0, 0}, {0, 1}}), qm({{0, 1}, {0, 1}})}};
  EXPECT_THROW(from_idempotent_basis(dependent), NotABasis);
  const IdempotentBasis<Q> not_idempotent{
      2, BasisMode::example3,
      {qm({{1, 0}, {0, 1}}), qm({{1, 0}, {0, 0}}), qm({{0, 0}, {1, 1}}), qm({{0, 1}, {0, 2}})}};
  EXPECT_THROW(from_idempotent_basis(not_idempotent), NotIdempotent);
  const IdempotentBasis<Q> units{
      2, BasisMode::example4,
      {qm({{1, 0}, {0, 0}}), qm({{0, 1}, {0, 0}}), qm({{0, 0}, {1, 0}}), qm({{0, 0}, {0, 1}})}};
  EXPECT_THROW(from_idempotent_basis(units), BlockNotIdempotent);
  EXPECT_THROW(from_idempotent_basis(IdempotentBasis<Q>{2, BasisMode::example3, {qm({{1, 0}, {0, 1}})}}), NotABasis);
}

TEST(ExampleFive, DiagonalAWithIdentityB) {
  const auto blk = analyze_example5_block(qm({{1, 0}, {0, 0}}), Matrix<Q>::identity(2));
  EXPECT_EQ(blk.c, Matrix<Q>(2, 2));
  EXPECT_EQ(blk.d, qm({{0, 0}, {0, 1}}));
  EXPECT_TRUE(blk.idempotent);
  EXPECT_EQ(blk.trace, Q(2));
  EXPECT_EQ(blk.rank, 2u);
  EXPECT_FALSE(blk.spans);
  EXPECT_THROW(example5_block(qm({{1, 0}, {0, 0}}), Matrix<Q>::identity(2)), NotABasis);
}

TEST(ExampleFive, GenericAWithIdentityBIsIdempotentButDegenerate) {
  const auto blk = analyze_example5_block(qm({{1, 2}, {3, 4}}), Matrix<Q>::identity(2));
  EXPECT_TRUE(blk.idempotent);
  EXPECT_EQ(blk.trace, Q(2));
  EXPECT_FALSE(blk.spans);  // a, 1, a - a^2, 1 - a lie in span(1, a, a^2)
}

TEST(ExampleFive, ZeroAIsNotABasis) {
  EXPECT_THROW(example5_block(Matrix<Q>(2, 2), Matrix<Q>::identity(2)), NotABasis);
}

TEST(ExampleFive, SingularBIsRejected) {
  EXPECT_THROW(analyze_example5_block(qm({{1, 0}, {0, 0}}), qm({{1, 1}, {1, 1}})), BNotInvertible);
}

TEST(ExampleFive, NonCommutingBGivesMatrixPAlgebra) {
  const auto basis = example5_block(qm({{1, 2}, {3, 4}}), qm({{1, 1}, {0, 1}}));
  EXPECT_TRUE(example4_condition(basis));
  const auto p = from_idempotent_basis(basis);
  EXPECT_TRUE(verify_axioms(p.product(), p.coproduct()).all_passed());
}

TEST(IdempotentBasisRecipe, ExampleFourSucceedsIffConditionHolds) {
  Rng rng(34);
  int accepted = 0;
  for (int t = 0; t < 60; ++t) {
    IdempotentBasis<Q> b;
    if (t % 3 == 0) {
      b = IdempotentBasis<Q>{2, BasisMode::example4, {rng.matrix(2, 2), rng.matrix(2, 2), rng.matrix(2, 2),
                                                      rng.matrix(2, 2)}};
    } else {
      const auto a = rng.matrix(2, 2), bb = rng.invertible(2);
      const auto blk = analyze_example5_block(a, bb);
      if (!blk.spans) continue;
      b = IdempotentBasis<Q>{2, BasisMode::example4, {blk.a, blk.b, blk.c, blk.d}};
      if (t % 3 == 2) b.matrices[3](0, 0) += Q(1);
    }
    bool spans;
    {
      SpanBasis<Q> s(4);
      for (const auto& m : b.matrices) s.insert(flatten(m));
      spans = s.full();
    }
    if (!spans) continue;
    const bool condition = example4_condition(b);
    try {
      from_idempotent_basis(b);
      EXPECT_TRUE(condition);
      ++accepted;
    } catch (const BlockNotIdempotent&) {
      EXPECT_FALSE(condition);
    }
  }
  EXPECT_GT(accepted, 10);
}
