#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace syzygy::linalg {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// A sampled prime together with its admissibility for the curve at hand.
class PrimeModulus {
 public:
  /// Smallest admissible sample; primes at or below this are rejected.
  static constexpr std::uint64_t kFloor = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kCeiling = std::uint64_t{1} << 62;

  /// Throws InvalidModulusError unless p is prime with kFloor < p < kCeiling.
  PrimeModulus(std::uint64_t p, bool admissible);

  std::uint64_t value() const { return p_; }
  bool admissible() const { return admissible_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
  bool admissible_;
};

/// Predicate deciding whether a prime may be used for reduction.
using Admissibility = std::function<bool(std::uint64_t)>;

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  std::int64_t value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Integer matrix in coordinate form. Entries are kept sorted by (row, col),
/// distinct, and nonzero.
class IntegerSparseMatrix {
 public:
  IntegerSparseMatrix() = default;

  /// Sorts the entries and drops zeros. Throws DomainError on an index out
  /// of range or a repeated (row, col) pair.
  IntegerSparseMatrix(std::size_t rows, std::size_t cols,
                      std::vector<MatrixEntry> entries);

  /// Like the constructor but sums repeated positions instead of rejecting.
  static IntegerSparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                           std::vector<MatrixEntry> entries);

  static IntegerSparseMatrix from_dense(
      const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const MatrixEntry> entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }

  IntegerSparseMatrix transposed() const;
  std::vector<std::vector<std::int64_t>> to_dense() const;

  friend bool operator==(const IntegerSparseMatrix&,
                         const IntegerSparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

/// Exact integer product a * b. Throws DomainError on a shape mismatch or
/// int64 overflow.
IntegerSparseMatrix multiply(const IntegerSparseMatrix& a,
                             const IntegerSparseMatrix& b);

enum class Certification { ModularConsensus, ExactRational };

std::string_view to_string(Certification c);

struct RankResult {
  std::size_t rank = 0;
  std::vector<PrimeModulus> primes_used;
  Certification certified = Certification::ModularConsensus;

  friend bool operator==(const RankResult&, const RankResult&) = default;
};

/// Rank over Z/p. Accepts any prime p < 2^62 (the sampling floor does not
/// apply here); throws InvalidModulusError otherwise.
std::size_t rank_mod_p(const IntegerSparseMatrix& m, std::uint64_t p);

/// Draws `count` distinct admissible primes in [2^30, 2^31) from a
/// seed-determined stream. Same (count, seed, predicate) -> same list.
/// Throws PrimeExhaustionError if the predicate rejects too many draws.
std::vector<PrimeModulus> sample_primes(std::size_t count, std::uint64_t seed,
                                        const Admissibility& admissible = {});

/// Maximum of rank_mod_p over sampled primes. A mod-p rank never exceeds
/// the rational rank, so the maximum is the best lower bound available.
RankResult rank_consensus(const IntegerSparseMatrix& m, std::size_t prime_count,
                          std::uint64_t seed,
                          const Admissibility& admissible = {});

/// Same as above with a fixed prime list.
RankResult rank_consensus(const IntegerSparseMatrix& m,
                          std::span<const PrimeModulus> primes);

inline constexpr std::size_t kDefaultCertificationCap = 2000;

/// Rank over Q by fraction-free (Bareiss) elimination. Throws
/// CertificationRefusedError when rows or cols exceed `cap`.
RankResult rank_exact(const IntegerSparseMatrix& m,
                      std::size_t cap = kDefaultCertificationCap);

}  // namespace syzygy::linalg
