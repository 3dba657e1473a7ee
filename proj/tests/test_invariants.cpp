#include <gtest/gtest.h>

#include "kproj/invariants.hpp"
#include "kproj/limits.hpp"
#include "support/oracles.hpp"

using namespace kproj;
using namespace kproj::testing;

namespace {

Multiplicities random_m(Rng& rng, std::size_t rows, std::size_t cols, long hi) {
  Multiplicities m(rows, std::vector<std::size_t>(cols));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<std::size_t>(rng.integer(0, hi));
  return m;
}

PAlgebra<Q> trivial_algebra() {
  Tensor<Q> c({1, 1, 1}), s({1, 1, 1});
  c(0, 0, 0) = Q(1);
  s(0, 0, 0) = Q(1);
  return PAlgebra<Q>::create(c, s);
}

EnRepresentation<Q> weak_only() {
  GeneratorImages<Q> diag(4, Matrix<Q>(1, 1));
  diag[0](0, 0) = Q(1);
  diag[3](0, 0) = Q(1);
  return EnRepresentation<Q>::weak_from_images(example1(1), diag);
}

std::vector<EnRepresentation<Q>> small_reps() {
  Rng rng(11);
  std::vector<EnRepresentation<Q>> out;
  for (int t = 0; t < 6; ++t) {
    const auto p = from_zero_one_matrix<Q>(rng.nonsingular_zero_one(1 + rng.index(3)));
    out.push_back(rep_from_multiplicities_commutative(p, random_m(rng, p.dimension(), p.dimension(), 1)));
  }
  for (int t = 0; t < 4; ++t) {
    const auto d = rng.semisimple(4);
    out.push_back(rep_from_multiplicities_semisimple(d, random_m(rng, d.l_dims.size(), d.m_dims.size(), 1)));
  }
  out.push_back(EnRepresentation<Q>::regular(example1(2)));
  return out;
}

SemisimpleData<Q> example5_single_block() {
  const auto b = example5_block(qm({{1, 2}, {3, 4}}), qm({{1, 1}, {0, 1}}));
  return semisimple_from_block_basis(b);
}

}  // namespace

TEST(PN, MatchesStringSummation) {
  for (const auto& rho : small_reps()) {
    for (std::size_t big_n = 1; big_n <= 3; ++big_n) {
      if (saturating_pow(rho.dimension(), big_n) > 64) continue;
      const auto p = build_P_N(rho, big_n);
      ASSERT_EQ(p, p_n_by_strings(rho.images(), rho.n(), rho.dimension(), big_n)) << rho.label() << " N=" << big_n;
      EXPECT_EQ(p * p, p);
      EXPECT_EQ(Q(static_cast<long>(rank(p))), trace(p));
    }
  }
}

TEST(PN, FirstProjectorOnCommutativeSummands) {
  // P_1 w_jk = r(k, j) w_jk.
  const auto r = zo({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  const auto p = from_zero_one_matrix<Q>(r);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      EXPECT_EQ(build_P_N(commutative_simple_module(p, j, k), 1)(0, 0), Q(r.get(k, j) ? 1 : 0));
}

TEST(PN, TrivialAlgebraIsOne) {
  const auto rho = EnRepresentation<Q>::from_images(trivial_algebra(), {Matrix<Q>::identity(1)});
  for (std::size_t big_n = 1; big_n <= 6; ++big_n) EXPECT_EQ(build_P_N(rho, big_n), Matrix<Q>::identity(1));
}

TEST(PN, ExampleOneSecondProductWithIdentityMultiplicities) {
  // The product e1 e2 = e2 comes from r = [[1,0],[1,1]] in the basis where the
  // coproduct is diagonal; here it is taken directly as a zero-one algebra.
  const auto r = zo({{1, 0}, {1, 1}});
  const auto p = from_zero_one_matrix<Q>(r);
  const Multiplicities m{{1, 0}, {0, 1}};
  const auto rho = rep_from_multiplicities_commutative(p, m);
  const auto p2 = build_P_N(rho, 2);
  EXPECT_EQ(p2.rows(), 4u);
  EXPECT_EQ(p2 * p2, p2);
  EXPECT_EQ(trace(p2), trace_via_transfer(transfer_matrix_commutative<Q>(r, m), 2));
}

TEST(PN, Errors) {
  const auto rho = small_reps().front();
  EXPECT_THROW(build_P_N(rho, 0), ShapeMismatch);
  EXPECT_THROW(trace_P_N_direct(rho, 0), ShapeMismatch);
  EXPECT_THROW(trace_via_transfer(Matrix<Q>::identity(2), 0), ShapeMismatch);
  const auto big = rep_from_multiplicities_commutative(from_zero_one_matrix<Q>(zo({{1, 0}, {0, 1}})), {{3, 3}, {3, 3}});
  ScopedCap cap(10000);
  EXPECT_THROW(build_P_N(big, 4), DimensionOverflow);
  EXPECT_THROW(trace_P_N_direct(big, 4, TraceMode::materialize), DimensionOverflow);
  EXPECT_NO_THROW(trace_P_N_direct(big, 40, TraceMode::network));
}

TEST(PN, WeakOnlyRepresentationIsNotIdempotent) {
  const auto rho = weak_only();
  // P_2 = 1 + 1 from the two constant strings, plus zero mixed terms.
  EXPECT_THROW(build_P_N(rho, 2), IdempotencyFailure);
  EXPECT_NE(idempotency_defect(rho, 2), Q(0));
}

TEST(PN, DefectEqualsDenseFrobeniusNorm) {
  std::vector<EnRepresentation<Q>> reps = small_reps();
  reps.push_back(weak_only());
  GeneratorImages<Q> weak2(4, Matrix<Q>(2, 2));
  weak2[0] = Matrix<Q>::identity(2);
  weak2[3] = qm({{1, 0}, {0, 0}});
  reps.push_back(EnRepresentation<Q>::weak_from_images(example1(1), weak2));
  for (const auto& rho : reps)
    for (std::size_t big_n = 1; big_n <= 4; ++big_n) {
      if (saturating_pow(rho.dimension(), big_n) > 81) continue;
      const auto p = p_n_by_strings(rho.images(), rho.n(), rho.dimension(), big_n);
      EXPECT_EQ(idempotency_defect(rho, big_n), frobenius_squared(p * p - p)) << rho.label() << " N=" << big_n;
    }
}

TEST(Trace, NetworkAgreesWithMaterialized) {
  for (const auto& rho : small_reps())
    for (std::size_t big_n = 1; big_n <= 3; ++big_n) {
      if (saturating_pow(rho.dimension(), 2 * big_n) > 100000) continue;
      EXPECT_EQ(trace_P_N_direct(rho, big_n, TraceMode::materialize), trace_P_N_direct(rho, big_n, TraceMode::network));
    }
}

TEST(Trace, ZeroRepresentation) {
  const auto p = example1(3);
  const auto rho = EnRepresentation<Q>::from_images(p, GeneratorImages<Q>(4, Matrix<Q>(2, 2)));
  for (std::size_t big_n = 1; big_n <= 4; ++big_n) EXPECT_EQ(trace_P_N_direct(rho, big_n), Q(0));
}

TEST(Trace, FirstTraceIsWeightedSum) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const auto r = rng.nonsingular_zero_one(n);
    const auto m = random_m(rng, n, n, 2);
    long expect = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) expect += static_cast<long>(m[j][k]) * (r.get(k, j) ? 1 : 0);
    const auto rho = rep_from_multiplicities_commutative(from_zero_one_matrix<Q>(r), m);
    EXPECT_EQ(trace_P_N_direct(rho, 1, TraceMode::materialize), Q(expect));
  }
}

TEST(Trace, IdentityMatrixExamples) {
  const auto r = zo({{1, 0}, {0, 1}});
  const auto p = from_zero_one_matrix<Q>(r);
  const Multiplicities ones{{1, 1}, {1, 1}}, id{{1, 0}, {0, 1}};
  EXPECT_EQ(trace_P_N_direct(rep_from_multiplicities_commutative(p, ones), 3, TraceMode::materialize), Q(8));
  EXPECT_EQ(trace_via_transfer(transfer_matrix_commutative<Q>(r, ones), 3), Q(8));
  EXPECT_EQ(trace_P_N_direct(rep_from_multiplicities_commutative(p, id), 5, TraceMode::materialize), Q(2));
  EXPECT_EQ(trace_via_transfer(transfer_matrix_commutative<Q>(r, id), 5), Q(2));
}

TEST(Transfer, CommutativeExamples) {
  const auto id = zo({{1, 0}, {0, 1}});
  const auto tri = zo({{1, 1}, {0, 1}});
  EXPECT_EQ(transfer_matrix_commutative<Q>(id, {{1, 0}, {0, 1}}), Matrix<Q>::identity(2));
  EXPECT_EQ(transfer_matrix_commutative<Q>(tri, {{1, 0}, {0, 1}}), tri.to_matrix<Q>());
  EXPECT_EQ(transfer_matrix_commutative<Q>(tri, {{0, 0}, {0, 0}}), Matrix<Q>(2, 2));
  EXPECT_EQ(transfer_matrix_commutative<Q>(tri, {{2, 1}, {0, 3}}), qm({{2, 3}, {0, 3}}));
  EXPECT_THROW(transfer_matrix_commutative<Q>(tri, {{1, 0}}), ShapeMismatch);
  EXPECT_THROW(transfer_matrix_commutative<Q>(tri, {{1}, {0, 1}}), ShapeMismatch);
}

TEST(Transfer, SemisimpleExamples) {
  const auto d = example5_single_block();
  EXPECT_EQ(transfer_matrix_semisimple(d, {{1}}), qm({{2}}));
  EXPECT_EQ(transfer_matrix_semisimple(d, {{0}}), qm({{0}}));
  EXPECT_EQ(trace_via_transfer(transfer_matrix_semisimple(d, {{1}}), 2), Q(4));
  const auto rho = rep_from_multiplicities_semisimple(d, {{1}});
  EXPECT_EQ(rho.dimension(), 4u);
  EXPECT_EQ(trace_P_N_direct(rho, 1, TraceMode::materialize), Q(2));
  EXPECT_EQ(trace_P_N_direct(rho, 2, TraceMode::materialize), Q(4));
  EXPECT_THROW(transfer_matrix_semisimple(d, {{1, 1}}), ShapeMismatch);
}

TEST(Transfer, SemisimpleOneDimensionalBlocksReduceToCommutative) {
  // W_ij is S(j, i), so the semisimple multiplicities are m transposed and
  // the transfer matrix becomes (r m)^T, with the same traces of powers.
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const auto r = rng.nonsingular_zero_one(n);
    const auto m = random_m(rng, n, n, 2);
    Multiplicities mt(n, std::vector<std::size_t>(n));
    Matrix<Q> mq(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mt[j][i] = m[i][j];
        mq(i, j) = Q(static_cast<long>(m[i][j]));
      }
    const auto ts = transfer_matrix_semisimple(SemisimpleData<Q>::from_zero_one(r), mt);
    EXPECT_EQ(ts, transpose(Matrix<Q>(r.to_matrix<Q>() * mq)));
    const auto tc = transfer_matrix_commutative<Q>(r, m);
    for (std::size_t big_n = 1; big_n <= 4; ++big_n) EXPECT_EQ(trace_via_transfer(ts, big_n), trace_via_transfer(tc, big_n));
  }
}

TEST(Transfer, IdentityTransferTrace) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t big_n = 1; big_n <= 6; ++big_n)
      EXPECT_EQ(trace_via_transfer(Matrix<Q>::identity(n), big_n), Q(static_cast<long>(n)));
}

TEST(Transfer, CommutativeEquivalence) {
  Rng rng(23);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const auto r = rng.nonsingular_zero_one(n);
    const auto m = random_m(rng, n, n, 2);
    const auto rho = rep_from_multiplicities_commutative(from_zero_one_matrix<Q>(r), m);
    const auto t_mat = transfer_matrix_commutative<Q>(r, m);
    for (std::size_t big_n = 1; big_n <= 5; ++big_n)
      EXPECT_EQ(trace_P_N_direct(rho, big_n), trace_via_transfer(t_mat, big_n));
  }
}

TEST(Transfer, SemisimpleEquivalence) {
  Rng rng(29);
  for (int t = 0; t < 15; ++t) {
    const auto d = rng.semisimple(9);
    const auto m = random_m(rng, d.l_dims.size(), d.m_dims.size(), 1);
    const auto rho = rep_from_multiplicities_semisimple(d, m);
    const auto t_mat = transfer_matrix_semisimple(d, m);
    for (std::size_t big_n = 1; big_n <= 4; ++big_n)
      EXPECT_EQ(trace_P_N_direct(rho, big_n), trace_via_transfer(t_mat, big_n));
  }
}

TEST(Invariants, FloatBackendAgrees) {
  ScopedEpsilon eps(1e-9);
  const auto r = zo({{1, 1, 0}, {0, 1, 0}, {0, 1, 1}});
  const Multiplicities m{{1, 0, 1}, {0, 1, 0}, {1, 1, 0}};
  const auto exact = rep_from_multiplicities_commutative(from_zero_one_matrix<Q>(r), m);
  const auto fl = rep_from_multiplicities_commutative(from_zero_one_matrix<Complex>(r), m);
  for (std::size_t big_n = 1; big_n <= 3; ++big_n) {
    const auto pf = build_P_N(fl, big_n);
    EXPECT_NEAR(trace(pf).real(), trace(build_P_N(exact, big_n)).get_d(), 1e-9);
  }
}
