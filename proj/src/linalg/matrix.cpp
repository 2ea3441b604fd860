#include "syzygy/errors.hpp"
#include "syzygy/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace syzygy::linalg {

namespace {

void check_range(std::size_t rows, std::size_t cols, const MatrixEntry& e) {
  if (e.row >= rows || e.col >= cols) {
    throw DomainError("matrix entry (" + std::to_string(e.row) + ", " +
                      std::to_string(e.col) + ") outside a " +
                      std::to_string(rows) + "x" + std::to_string(cols) +
                      " matrix");
  }
}

bool position_less(const MatrixEntry& x, const MatrixEntry& y) {
  return x.row != y.row ? x.row < y.row : x.col < y.col;
}

}  // namespace

IntegerSparseMatrix::IntegerSparseMatrix(std::size_t rows, std::size_t cols,
                                         std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols) {
  for (const auto& e : entries) check_range(rows, cols, e);
  std::erase_if(entries, [](const MatrixEntry& e) { return e.value == 0; });
  std::sort(entries.begin(), entries.end(), position_less);
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].row == entries[i - 1].row &&
        entries[i].col == entries[i - 1].col) {
      throw DomainError("repeated matrix position (" +
                        std::to_string(entries[i].row) + ", " +
                        std::to_string(entries[i].col) + ")");
    }
  }
  entries_ = std::move(entries);
}

IntegerSparseMatrix IntegerSparseMatrix::from_triplets(
    std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries) {
  for (const auto& e : entries) check_range(rows, cols, e);
  std::sort(entries.begin(), entries.end(), position_less);
  std::vector<MatrixEntry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().row == e.row &&
        merged.back().col == e.col) {
      if (__builtin_add_overflow(merged.back().value, e.value,
                                 &merged.back().value)) {
        throw DomainError("int64 overflow while merging matrix entries");
      }
    } else {
      merged.push_back(e);
    }
  }
  return IntegerSparseMatrix(rows, cols, std::move(merged));
}

IntegerSparseMatrix IntegerSparseMatrix::from_dense(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw DomainError("ragged dense matrix");
    for (std::size_t j = 0; j < ncols; ++j) {
      if (rows[i][j] != 0) entries.push_back({i, j, rows[i][j]});
    }
  }
  return IntegerSparseMatrix(rows.size(), ncols, std::move(entries));
}

IntegerSparseMatrix IntegerSparseMatrix::transposed() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return IntegerSparseMatrix(cols_, rows_, std::move(t));
}

std::vector<std::vector<std::int64_t>> IntegerSparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> d(rows_,
                                           std::vector<std::int64_t>(cols_, 0));
  for (const auto& e : entries_) d[e.row][e.col] = e.value;
  return d;
}

IntegerSparseMatrix multiply(const IntegerSparseMatrix& a,
                             const IntegerSparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("shape mismatch in matrix product");
  }
  // rows of b, indexed for the inner join
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> b_rows(
      b.rows());
  for (const auto& e : b.entries()) b_rows[e.row].emplace_back(e.col, e.value);

  std::vector<MatrixEntry> out;
  std::map<std::size_t, std::int64_t> acc;
  auto flush = [&](std::size_t row) {
    for (const auto& [col, v] : acc) {
      if (v != 0) out.push_back({row, col, v});
    }
    acc.clear();
  };
  std::size_t current = 0;
  for (const auto& e : a.entries()) {
    if (e.row != current) {
      flush(current);
      current = e.row;
    }
    for (const auto& [col, v] : b_rows[e.col]) {
      std::int64_t term = 0;
      if (__builtin_mul_overflow(e.value, v, &term) ||
          __builtin_add_overflow(acc[col], term, &acc[col])) {
        throw DomainError("int64 overflow in matrix product");
      }
    }
  }
  flush(current);
  return IntegerSparseMatrix(a.rows(), b.cols(), std::move(out));
}

std::string_view to_string(Certification c) {
  switch (c) {
    case Certification::ModularConsensus:
      return "ModularConsensus";
    case Certification::ExactRational:
      return "ExactRational";
  }
  return "?";
}

}  // namespace syzygy::linalg
