// Rank over Z/p.
//
// Koszul differentials are very sparse and mostly +-1, so elimination starts
// with structural pivots: rows whose leading columns are pairwise distinct
// form an upper-triangular block of full rank without any arithmetic. The
// remaining rows are reduced against that block (Schur complement) and the
// process repeats on the residual. Once the residual is small or dense it is
// finished off with plain dense elimination.

#include "syzygy/errors.hpp"
#include "syzygy/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace syzygy::linalg {

namespace {

using u128 = unsigned __int128;

class Zp {
 public:
  explicit Zp(std::uint64_t p) : p_(p), narrow_(p < (std::uint64_t{1} << 32)) {}

  std::uint64_t modulus() const { return p_; }
  bool narrow() const { return narrow_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (narrow_) return a * b % p_;
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p_);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

 private:
  std::uint64_t p_;
  bool narrow_;
};

struct SparseRow {
  std::vector<std::uint32_t> cols;  // strictly increasing
  std::vector<std::uint64_t> vals;  // nonzero residues

  std::size_t size() const { return cols.size(); }
  bool empty() const { return cols.empty(); }
};

// Dense matrices up to this many residues are eliminated directly.
constexpr std::size_t kDenseDirect = std::size_t{1} << 16;
// Never materialize a dense residual larger than this (about 1 GiB of words).
constexpr std::size_t kDenseBudget = std::size_t{1} << 27;

template <typename Word>
std::size_t dense_rank_impl(const std::vector<SparseRow>& rows,
                            std::size_t ncols, const Zp& F) {
  const std::size_t nrows = rows.size();
  std::vector<Word> a(nrows * ncols, 0);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      a[i * ncols + rows[i].cols[k]] = static_cast<Word>(rows[i].vals[k]);
    }
  }
  const std::uint64_t p = F.modulus();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && a[pivot * ncols + col] == 0) ++pivot;
    if (pivot == nrows) continue;
    Word* prow = &a[rank * ncols];
    if (pivot != rank) {
      std::swap_ranges(prow, prow + ncols, &a[pivot * ncols]);
    }
    const std::uint64_t scale = F.inv(prow[col]);
    for (std::size_t j = col; j < ncols; ++j) {
      if (prow[j] != 0) prow[j] = static_cast<Word>(F.mul(prow[j], scale));
    }
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      Word* row = &a[i * ncols];
      if (row[col] == 0) continue;
      const std::uint64_t f = F.neg(row[col]);
      if (F.narrow()) {
        // f, prow[j] < 2^32 so the sum stays below 2^64
        for (std::size_t j = col; j < ncols; ++j) {
          row[j] = static_cast<Word>(
              (static_cast<std::uint64_t>(row[j]) +
               f * static_cast<std::uint64_t>(prow[j])) %
              p);
        }
      } else {
        for (std::size_t j = col; j < ncols; ++j) {
          row[j] = static_cast<Word>(
              (static_cast<u128>(row[j]) + static_cast<u128>(f) * prow[j]) %
              p);
        }
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t dense_rank(const std::vector<SparseRow>& rows, std::size_t ncols,
                       const Zp& F) {
  if (F.narrow()) return dense_rank_impl<std::uint32_t>(rows, ncols, F);
  return dense_rank_impl<std::uint64_t>(rows, ncols, F);
}

std::size_t total_nonzeros(const std::vector<SparseRow>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols,
                        const Zp& F) {
  std::size_t rank = 0;
  std::vector<std::uint64_t> acc(ncols, 0);
  for (;;) {
    std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });
    if (rows.empty() || ncols == 0) return rank;
    if (rows.size() * ncols <= kDenseDirect) {
      return rank + dense_rank(rows, ncols, F);
    }

    // one pivot per leading column, preferring the sparsest candidate
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_of(ncols, kNone);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::uint32_t lead = rows[i].cols.front();
      std::size_t& slot = pivot_of[lead];
      if (slot == kNone || rows[i].size() < rows[slot].size()) slot = i;
    }
    std::vector<char> is_pivot_row(rows.size(), 0);
    std::size_t pivots = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
      const std::size_t i = pivot_of[c];
      if (i == kNone) continue;
      is_pivot_row[i] = 1;
      ++pivots;
      SparseRow& r = rows[i];
      const std::uint64_t scale = F.inv(r.vals.front());
      for (auto& v : r.vals) v = F.mul(v, scale);
    }
    rank += pivots;

    std::vector<std::uint32_t> compact(ncols, 0);
    std::size_t residual_cols = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (pivot_of[c] == kNone) compact[c] = static_cast<std::uint32_t>(residual_cols++);
    }

    // Schur complement of the triangular block; pivot rows only touch
    // columns to the right of their lead, so one left-to-right sweep
    // clears every pivot column.
    std::vector<SparseRow> residual;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (is_pivot_row[i]) continue;
      const SparseRow& r = rows[i];
      for (std::size_t k = 0; k < r.size(); ++k) acc[r.cols[k]] = r.vals[k];
      SparseRow out;
      for (std::size_t c = r.cols.front(); c < ncols; ++c) {
        const std::uint64_t v = acc[c];
        if (v == 0) continue;
        acc[c] = 0;
        const std::size_t piv = pivot_of[c];
        if (piv == kNone) {
          out.cols.push_back(compact[c]);
          out.vals.push_back(v);
          continue;
        }
        const SparseRow& pr = rows[piv];
        for (std::size_t k = 1; k < pr.size(); ++k) {
          std::uint64_t& slot = acc[pr.cols[k]];
          slot = F.sub(slot, F.mul(v, pr.vals[k]));
        }
      }
      if (!out.empty()) residual.push_back(std::move(out));
    }

    rows = std::move(residual);
    ncols = residual_cols;
    acc.assign(ncols, 0);
    if (rows.empty() || ncols == 0) return rank;

    const std::size_t cells = rows.size() * ncols;
    const bool dense_enough = total_nonzeros(rows) * 8 >= cells;
    const bool slow_progress = pivots * 64 < std::min(rows.size(), ncols);
    if (cells <= kDenseBudget && (dense_enough || slow_progress)) {
      return rank + dense_rank(rows, ncols, F);
    }
  }
}

}  // namespace

std::size_t rank_mod_p(const IntegerSparseMatrix& m, std::uint64_t p) {
  if (p >= PrimeModulus::kCeiling || !is_prime(p)) {
    throw InvalidModulusError("modulus " + std::to_string(p) +
                              " is not a prime below 2^62");
  }
  if (m.nonzeros() == 0) return 0;
  const Zp F(p);
  // eliminate along the shorter dimension
  const bool flip = m.cols() > m.rows();
  const std::size_t nrows = flip ? m.cols() : m.rows();
  const std::size_t ncols = flip ? m.rows() : m.cols();
  if (ncols > UINT32_MAX) throw DomainError("matrix too wide");

  // entries are sorted by (row, col), so both orientations fill each row
  // with increasing column indices
  std::vector<SparseRow> rows(nrows);
  for (const auto& e : m.entries()) {
    const std::uint64_t v = F.from_int(e.value);
    if (v == 0) continue;
    SparseRow& r = rows[flip ? e.col : e.row];
    r.cols.push_back(static_cast<std::uint32_t>(flip ? e.row : e.col));
    r.vals.push_back(v);
  }
  return sparse_rank(std::move(rows), ncols, F);
}

}  // namespace syzygy::linalg
