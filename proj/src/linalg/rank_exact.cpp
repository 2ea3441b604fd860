#include "syzygy/errors.hpp"
#include "syzygy/linalg.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace syzygy::linalg {

RankResult rank_exact(const IntegerSparseMatrix& m, std::size_t cap) {
  if (m.rows() > cap || m.cols() > cap) {
    throw CertificationRefusedError(
        "exact rank refused for a " + std::to_string(m.rows()) + "x" +
        std::to_string(m.cols()) + " matrix (cap " + std::to_string(cap) + ")");
  }
  RankResult result;
  result.certified = Certification::ExactRational;
  if (m.nonzeros() == 0) return result;

  // keep the shorter side as rows; Bareiss work is rows^2 * cols
  const bool flip = m.rows() > m.cols();
  const std::size_t nrows = flip ? m.cols() : m.rows();
  const std::size_t ncols = flip ? m.rows() : m.cols();
  std::vector<std::vector<mpz_class>> a(nrows, std::vector<mpz_class>(ncols));
  for (const auto& e : m.entries()) {
    const auto i = flip ? e.col : e.row;
    const auto j = flip ? e.row : e.col;
    a[i][j] = static_cast<long>(e.value);
  }

  // Fraction-free elimination. After k pivots every live entry is a
  // (k+1)x(k+1) minor, so the division by the previous pivot is exact even
  // when columns without a pivot are skipped.
  mpz_class previous = 1;
  std::size_t rank = 0;
  mpz_class t;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && a[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(a[pivot], a[rank]);
    const auto& prow = a[rank];
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      auto& row = a[i];
      for (std::size_t j = col + 1; j < ncols; ++j) {
        t = prow[col] * row[j];
        t -= row[col] * prow[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      row[col] = 0;
    }
    previous = prow[col];
    ++rank;
  }
  result.rank = rank;
  return result;
}

}  // namespace syzygy::linalg
