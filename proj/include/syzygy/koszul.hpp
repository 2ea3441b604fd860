#pragma once

#include "syzygy/curves.hpp"
#include "syzygy/linalg.hpp"

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace syzygy::koszul {

/// L = d P with d >= 2g + 1; h^0(L) = r + 1 where r = d - g.
struct LineBundleSpec {
  int d = 0;
  int r = 0;
};

/// Throws HypothesisError when d < 2g + 1.
LineBundleSpec make_bundle(const curves::CurveModel& c, int d);

/// A p-subset of {0, ..., n-1} and its colexicographic position.
struct WedgeIndex {
  std::vector<int> subset;
  std::size_t position = 0;
};

/// Colex position of a strictly increasing subset: sum_k C(s_k, k+1).
std::size_t wedge_rank(std::span<const int> subset);

/// Inverse of wedge_rank. Throws DomainError unless position < C(n, p).
WedgeIndex wedge_unrank(int n, int p, std::size_t position);

/// Section bases for one embedded curve. V = H^0(L) spans the linear forms,
/// W_q = H^0(L^q) for 0 <= q <= max_q.
class KoszulContext {
 public:
  KoszulContext(curves::CurveModel curve, int d, int max_q = 4);

  const curves::CurveModel& curve() const { return curve_; }
  const LineBundleSpec& bundle() const { return bundle_; }
  const curves::SectionBasis& V() const { return W_[1]; }
  int max_q() const { return static_cast<int>(W_.size()) - 1; }
  /// Throws DomainError for q outside [0, max_q].
  const curves::SectionBasis& W(int q) const;
  /// dim W_q, 0 for q < 0.
  std::size_t section_dim(int q) const;
  /// dim of wedge^p V (x) W_q.
  std::size_t middle_dim(int p, int q) const;

 private:
  curves::CurveModel curve_;
  LineBundleSpec bundle_;
  std::vector<curves::SectionBasis> W_;
};

/// d_{p,q}: wedge^p V (x) W_q -> wedge^{p-1} V (x) W_{q+1},
///   e_S (x) w  |->  sum_k (-1)^k e_{S - s_k} (x) (v_{s_k} w).
/// Column index = colex(S) * dim W_q + w, row index likewise. Requires
/// 0 <= p <= r+1 and 0 <= q < max_q; otherwise throws DomainError.
linalg::IntegerSparseMatrix build_differential(const KoszulContext& ctx, int p,
                                               int q);

enum class RankMode { Consensus, ExactBelowCap };

struct RankPolicy {
  RankMode mode = RankMode::Consensus;
  std::size_t prime_count = 3;
  std::uint64_t seed = 1;
  std::size_t exact_cap = linalg::kDefaultCertificationCap;
  std::size_t jobs = 1;
};

/// dim K_{p,q} = middle_dim - rank d_{p,q} - rank d_{p+1,q-1}.
struct BettiEntry {
  int p = 0;
  int q = 0;
  std::size_t middle_dim = 0;
  std::size_t rank_out = 0;
  std::size_t rank_in = 0;
  long dim = 0;
  linalg::Certification certification = linalg::Certification::ExactRational;
  std::vector<std::uint64_t> primes;
};

/// Memoized ranks of the differentials of one context. Each d_{p,q} is
/// ranked at most once; concurrent requests for the same key may both
/// compute, and always store the same value.
class DifferentialRanks {
 public:
  DifferentialRanks(const KoszulContext& ctx, RankPolicy policy);

  const RankPolicy& policy() const { return policy_; }
  std::span<const linalg::PrimeModulus> primes() const { return primes_; }

  /// Rank of d_{p,q}; empty differentials report rank 0, ExactRational.
  linalg::RankResult rank(int p, int q);

  /// Computes the listed differentials with up to policy().jobs threads.
  void prefetch(std::span<const std::pair<int, int>> keys);

  /// Non-trivial rank computations performed so far.
  std::size_t computations() const { return computations_.load(); }

 private:
  bool trivial(int p, int q) const;
  linalg::RankResult compute(const linalg::IntegerSparseMatrix& m) const;

  const KoszulContext& ctx_;
  RankPolicy policy_;
  std::vector<linalg::PrimeModulus> primes_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, linalg::RankResult> cache_;
  std::atomic<std::size_t> computations_{0};
};

BettiEntry koszul_dim(const KoszulContext& ctx, int p, int q,
                      DifferentialRanks& ranks);

/// Convenience overload with a private cache.
BettiEntry koszul_dim(const KoszulContext& ctx, int p, int q,
                      const RankPolicy& policy);

struct IndexRange {
  int first = 0;
  int last = 0;  // inclusive
};

class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(IndexRange p, IndexRange q, std::vector<BettiEntry> entries,
             std::vector<std::uint64_t> primes, std::uint64_t seed);

  IndexRange p_range() const { return p_; }
  IndexRange q_range() const { return q_; }
  std::span<const BettiEntry> entries() const { return entries_; }
  const BettiEntry* find(int p, int q) const;
  /// Primes behind the modular ranks (empty for a fully exact table).
  std::span<const std::uint64_t> primes() const { return primes_; }
  std::uint64_t seed() const { return seed_; }

 private:
  IndexRange p_;
  IndexRange q_;
  std::vector<BettiEntry> entries_;  // ordered by (q, p)
  std::vector<std::uint64_t> primes_;
  std::uint64_t seed_ = 0;
};

/// Requires 0 <= q.first <= q.last <= 3 and 0 <= p.first <= p.last.
BettiTable betti_table(const KoszulContext& ctx, IndexRange p, IndexRange q,
                       const RankPolicy& policy);

BettiTable betti_table(const KoszulContext& ctx, IndexRange p, IndexRange q,
                       DifferentialRanks& ranks);

}  // namespace syzygy::koszul
