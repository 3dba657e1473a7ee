#pragma once

#include <vector>

#include "kproj/zero_one.hpp"

namespace kproj {

/// Lexicographic minimum (row-major, 0 < 1) of P r Q over all permutation
/// matrices P, Q. Exact for every supported size.
ZeroOneMatrix canonical_form(const ZeroOneMatrix& r);

struct MatrixClass {
  std::size_t id = 0;  // position in canonical-form order, 1-based
  ZeroOneMatrix representative;
  unsigned long long orbit_size = 0;
};

struct ClassInvariants {
  std::vector<int> row_sums;     // sorted ascending
  std::vector<int> column_sums;  // sorted ascending
  long long abs_determinant = 0;
  long long permanent = 0;
};

ClassInvariants class_invariants(const ZeroOneMatrix& r);

struct EnumerationOptions {
  std::size_t limit = 5;     // largest n accepted
  std::size_t workers = 1;   // 0 means hardware concurrency
  bool exhaustive = false;   // scan all 2^(n^2) matrices instead of row-sorted tuples
};

/// Classes of nonsingular n x n (0,1)-matrices up to independent row and
/// column permutations, in canonical-form order. Independent of the worker
/// count. Throws LimitExceeded.
std::vector<MatrixClass> enumerate_classes(std::size_t n, const EnumerationOptions& options = {});

}  // namespace kproj
