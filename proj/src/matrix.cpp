#include "kproj/matrix.hpp"

#include <Eigen/SVD>

namespace kproj {

std::size_t rank(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row, then run Bareiss elimination over Z.
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      a[r * cols + c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }

  std::size_t rk = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rk; r < rows; ++r) {
      if (a[r * cols + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rk) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[rk * cols + k]);
    }
    const mpz_class p = a[rk * cols + c];
    for (std::size_t r = rk + 1; r < rows; ++r) {
      const mpz_class f = a[r * cols + c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        mpz_class v = p * a[r * cols + k] - f * a[rk * cols + k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r * cols + k] = v;
      }
      a[r * cols + c] = 0;
    }
    prev = p;
    ++rk;
  }
  return rk;
}

std::size_t rank(const Matrix<Complex>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  std::size_t rk = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > epsilon()) ++rk;
  }
  return rk;
}

}  // namespace kproj
