#include "kproj/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "kproj/errors.hpp"

namespace kproj {

namespace {

using Rows = std::vector<std::uint32_t>;

std::uint32_t permute_bits(std::uint32_t row, const std::vector<std::size_t>& perm, std::size_t n) {
  // New column c holds old column perm[c].
  std::uint32_t out = 0;
  for (std::size_t c = 0; c < n; ++c) out |= ((row >> (n - 1 - perm[c])) & 1U) << (n - 1 - c);
  return out;
}

Rows canonical_rows(const Rows& rows, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rows best, cur(n);
  do {
    for (std::size_t r = 0; r < n; ++r) cur[r] = permute_bits(rows[r], perm, n);
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

unsigned long long factorial(std::size_t n) {
  unsigned long long f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

using Tally = std::map<Rows, unsigned long long>;

void visit(const Rows& rows, std::size_t n, Tally& tally) {
  if (!ZeroOneMatrix(n, rows).is_nonsingular()) return;
  ++tally[canonical_rows(rows, n)];
}

// Strictly increasing row tuples whose first row is `first`.
void generate(std::size_t n, Rows& rows, std::size_t depth, Tally& tally) {
  if (depth == n) {
    visit(rows, n, tally);
    return;
  }
  const std::uint32_t top = (1U << n) - 1;
  for (std::uint32_t r = rows[depth - 1] + 1; r <= top; ++r) {
    rows[depth] = r;
    generate(n, rows, depth + 1, tally);
  }
}

// Every bit pattern whose first row is `first`; a pattern is only examined
// further when its rows are strictly increasing.
void scan(std::size_t n, std::uint32_t first, Tally& tally) {
  const std::size_t rest = n - 1;
  const unsigned long long count = 1ULL << (rest * n);
  const std::uint32_t mask = (1U << n) - 1;
  Rows rows(n);
  rows[0] = first;
  for (unsigned long long bits = 0; bits < count; ++bits) {
    bool sorted = true;
    std::uint32_t prev = first;
    for (std::size_t r = 0; r < rest && sorted; ++r) {
      const auto row = static_cast<std::uint32_t>((bits >> (n * (rest - 1 - r))) & mask);
      sorted = row > prev;
      rows[r + 1] = prev = row;
    }
    if (sorted) visit(rows, n, tally);
  }
}

}  // namespace

ZeroOneMatrix canonical_form(const ZeroOneMatrix& r) {
  return ZeroOneMatrix(r.size(), canonical_rows(r.rows(), r.size()));
}

ClassInvariants class_invariants(const ZeroOneMatrix& r) {
  ClassInvariants out;
  for (std::size_t k = 0; k < r.size(); ++k) {
    out.row_sums.push_back(r.row_sum(k));
    out.column_sums.push_back(r.column_sum(k));
  }
  std::sort(out.row_sums.begin(), out.row_sums.end());
  std::sort(out.column_sums.begin(), out.column_sums.end());
  out.abs_determinant = r.abs_determinant();
  out.permanent = r.permanent();
  return out;
}

std::vector<MatrixClass> enumerate_classes(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw ShapeMismatch("n must be positive");
  if (n > options.limit || n > ZeroOneMatrix::max_dimension) {
    throw LimitExceeded("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(std::min(options.limit, ZeroOneMatrix::max_dimension)));
  }
  // A nonsingular matrix has distinct nonzero rows, so the smallest row is
  // at most 2^n - n and the orbit contains a row-sorted matrix.
  const std::uint32_t first_max = (1U << n) - static_cast<std::uint32_t>(n);
  std::size_t workers = options.workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.workers;
  workers = std::min<std::size_t>(workers, first_max);

  std::vector<Tally> tallies(workers);
  auto work = [&](std::size_t w) {
    for (std::uint32_t first = 1 + static_cast<std::uint32_t>(w); first <= first_max;
         first += static_cast<std::uint32_t>(workers)) {
      if (options.exhaustive) {
        scan(n, first, tallies[w]);
      } else {
        Rows rows(n);
        rows[0] = first;
        generate(n, rows, 1, tallies[w]);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  Tally merged;
  for (const auto& t : tallies)
    for (const auto& [rows, count] : t) merged[rows] += count;

  std::vector<MatrixClass> out;
  const unsigned long long row_orders = factorial(n);
  for (const auto& [rows, count] : merged) {
    out.push_back({out.size() + 1, ZeroOneMatrix(n, rows), count * row_orders});
  }
  return out;
}

}  // namespace kproj
