#include "syzygy/koszul.hpp"

#include "syzygy/binomial.hpp"
#include "syzygy/errors.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

namespace syzygy::koszul {

using curves::CurveModel;
using curves::SectionBasis;
using linalg::Certification;
using linalg::IntegerSparseMatrix;
using linalg::MatrixEntry;
using linalg::RankResult;

namespace {

std::size_t choose(long n, long k) {
  return static_cast<std::size_t>(binomial(n, k));
}

// Runs task(0..count-1) on up to `jobs` threads; rethrows the first failure.
template <typename Task>
void run_parallel(std::size_t count, std::size_t jobs, Task task) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

LineBundleSpec make_bundle(const CurveModel& c, int d) {
  const int g = c.genus();
  if (d < 2 * g + 1) {
    throw HypothesisError("degree d=" + std::to_string(d) +
                          " is below 2g+1=" + std::to_string(2 * g + 1));
  }
  return {d, d - g};
}

std::size_t wedge_rank(std::span<const int> subset) {
  std::size_t position = 0;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k > 0 && subset[k] <= subset[k - 1]) {
      throw DomainError("wedge subset must be strictly increasing");
    }
    position += choose(subset[k], static_cast<long>(k) + 1);
  }
  return position;
}

WedgeIndex wedge_unrank(int n, int p, std::size_t position) {
  if (n < 0 || p < 0 || p > n || position >= choose(n, p)) {
    throw DomainError("wedge position " + std::to_string(position) +
                      " out of range for C(" + std::to_string(n) + ", " +
                      std::to_string(p) + ")");
  }
  WedgeIndex w;
  w.position = position;
  w.subset.resize(static_cast<std::size_t>(p));
  long top = n - 1;
  for (int k = p; k >= 1; --k) {
    while (choose(top, k) > position) --top;
    w.subset[static_cast<std::size_t>(k - 1)] = static_cast<int>(top);
    position -= choose(top, k);
    --top;
  }
  return w;
}

KoszulContext::KoszulContext(CurveModel curve, int d, int max_q)
    : curve_(std::move(curve)), bundle_(make_bundle(curve_, d)) {
  if (max_q < 1) throw DomainError("a Koszul context needs max_q >= 1");
  W_.reserve(static_cast<std::size_t>(max_q) + 1);
  for (int q = 0; q <= max_q; ++q) W_.emplace_back(curve_, q * d);
}

const SectionBasis& KoszulContext::W(int q) const {
  if (q < 0 || q > max_q()) {
    throw DomainError("W_" + std::to_string(q) + " not built (max_q = " +
                      std::to_string(max_q()) + ")");
  }
  return W_[static_cast<std::size_t>(q)];
}

std::size_t KoszulContext::section_dim(int q) const {
  return q < 0 ? 0 : W(q).size();
}

std::size_t KoszulContext::middle_dim(int p, int q) const {
  return choose(bundle_.r + 1, p) * section_dim(q);
}

IntegerSparseMatrix build_differential(const KoszulContext& ctx, int p, int q) {
  const int n = ctx.bundle().r + 1;
  if (p < 0 || p > n || q < 0 || q >= ctx.max_q()) {
    throw DomainError("no differential d_{" + std::to_string(p) + "," +
                      std::to_string(q) + "} in this context");
  }
  const SectionBasis& V = ctx.V();
  const SectionBasis& Wq = ctx.W(q);
  const std::size_t dim_q = Wq.size();
  const std::size_t dim_next = ctx.section_dim(q + 1);
  const std::size_t rows = choose(n, p - 1) * dim_next;
  const std::size_t cols = choose(n, p) * dim_q;
  if (p == 0) return IntegerSparseMatrix(rows, cols, {});

  const int d = ctx.bundle().d;
  const auto& curve = ctx.curve();
  // products v_s * w, shared by every subset containing s
  std::vector<std::vector<curves::Coordinates>> product(V.size());
  for (std::size_t s = 0; s < V.size(); ++s) {
    product[s].reserve(dim_q);
    for (std::size_t w = 0; w < dim_q; ++w) {
      product[s].push_back(
          curves::multiply_monomial(curve, V[s], d, Wq[w], q * d));
    }
  }

  std::vector<MatrixEntry> entries;
  std::vector<int> subset(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) subset[static_cast<std::size_t>(k)] = k;
  std::vector<std::size_t> face_rank(static_cast<std::size_t>(p));
  const std::size_t count = choose(n, p);
  for (std::size_t position = 0; position < count; ++position) {
    // colex rank of S minus its k-th element
    for (int k = 0; k < p; ++k) {
      std::size_t r = 0;
      for (int i = 0; i < p; ++i) {
        if (i == k) continue;
        const long slot = i < k ? i + 1 : i;
        r += choose(subset[static_cast<std::size_t>(i)], slot);
      }
      face_rank[static_cast<std::size_t>(k)] = r;
    }
    for (std::size_t w = 0; w < dim_q; ++w) {
      const std::size_t col = position * dim_q + w;
      for (int k = 0; k < p; ++k) {
        const auto s = static_cast<std::size_t>(subset[static_cast<std::size_t>(k)]);
        const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
        const std::size_t row_base = face_rank[static_cast<std::size_t>(k)] * dim_next;
        for (const auto& [u, coeff] : product[s][w]) {
          entries.push_back({row_base + u, col, sign * coeff});
        }
      }
    }
    // next subset in colex order
    int k = 0;
    while (k + 1 < p && subset[static_cast<std::size_t>(k)] + 1 ==
                            subset[static_cast<std::size_t>(k) + 1]) {
      ++k;
    }
    ++subset[static_cast<std::size_t>(k)];
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
  }
  return IntegerSparseMatrix(rows, cols, std::move(entries));
}

DifferentialRanks::DifferentialRanks(const KoszulContext& ctx, RankPolicy policy)
    : ctx_(ctx), policy_(policy) {
  const auto& curve = ctx.curve();
  primes_ = linalg::sample_primes(
      policy.prime_count, policy.seed,
      [&curve](std::uint64_t p) { return curve.prime_admissible(p); });
}

bool DifferentialRanks::trivial(int p, int q) const {
  return p <= 0 || p > ctx_.bundle().r + 1 || q < 0;
}

RankResult DifferentialRanks::compute(const IntegerSparseMatrix& m) const {
  if (policy_.mode == RankMode::ExactBelowCap && m.rows() <= policy_.exact_cap &&
      m.cols() <= policy_.exact_cap) {
    return linalg::rank_exact(m, policy_.exact_cap);
  }
  return linalg::rank_consensus(m, primes_);
}

RankResult DifferentialRanks::rank(int p, int q) {
  if (trivial(p, q)) return RankResult{0, {}, Certification::ExactRational};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find({p, q}); it != cache_.end()) return it->second;
  }
  RankResult result = compute(build_differential(ctx_, p, q));
  ++computations_;
  std::lock_guard lock(mutex_);
  return cache_.emplace(std::make_pair(p, q), std::move(result)).first->second;
}

void DifferentialRanks::prefetch(std::span<const std::pair<int, int>> keys) {
  std::vector<std::pair<int, int>> todo;
  {
    std::lock_guard lock(mutex_);
    for (const auto& key : keys) {
      if (!trivial(key.first, key.second) && !cache_.contains(key)) {
        todo.push_back(key);
      }
    }
  }
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  if (todo.empty()) return;

  std::vector<IntegerSparseMatrix> matrices(todo.size());
  run_parallel(todo.size(), policy_.jobs, [&](std::size_t i) {
    matrices[i] = build_differential(ctx_, todo[i].first, todo[i].second);
  });

  // one task per (matrix, prime); exact certification is one task per matrix
  std::vector<bool> exact(todo.size());
  for (std::size_t i = 0; i < todo.size(); ++i) {
    exact[i] = policy_.mode == RankMode::ExactBelowCap &&
               matrices[i].rows() <= policy_.exact_cap &&
               matrices[i].cols() <= policy_.exact_cap;
  }
  const std::size_t np = primes_.size();
  std::vector<std::size_t> modular_rank(todo.size() * np, 0);
  std::vector<RankResult> exact_rank(todo.size());
  run_parallel(todo.size() * np, policy_.jobs, [&](std::size_t t) {
    const std::size_t i = t / np;
    const std::size_t k = t % np;
    if (exact[i]) {
      if (k == 0) exact_rank[i] = linalg::rank_exact(matrices[i], policy_.exact_cap);
      return;
    }
    modular_rank[t] = linalg::rank_mod_p(matrices[i], primes_[k].value());
  });

  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < todo.size(); ++i) {
    RankResult result;
    if (exact[i]) {
      result = exact_rank[i];
    } else {
      for (std::size_t k = 0; k < np; ++k) {
        result.rank = std::max(result.rank, modular_rank[i * np + k]);
      }
      result.primes_used = primes_;
      result.certified = Certification::ModularConsensus;
    }
    cache_.emplace(todo[i], std::move(result));
    ++computations_;
  }
}

BettiEntry koszul_dim(const KoszulContext& ctx, int p, int q,
                      DifferentialRanks& ranks) {
  if (p < 0 || q < 0 || q > ctx.max_q()) {
    throw DomainError("invalid Koszul position (" + std::to_string(p) + ", " +
                      std::to_string(q) + ")");
  }
  BettiEntry e;
  e.p = p;
  e.q = q;
  e.middle_dim = ctx.middle_dim(p, q);
  const RankResult out = ranks.rank(p, q);
  const RankResult in = ranks.rank(p + 1, q - 1);
  e.rank_out = out.rank;
  e.rank_in = in.rank;
  e.dim = static_cast<long>(e.middle_dim) - static_cast<long>(out.rank) -
          static_cast<long>(in.rank);
  const bool exact = out.certified == Certification::ExactRational &&
                     in.certified == Certification::ExactRational;
  e.certification = exact ? Certification::ExactRational
                          : Certification::ModularConsensus;
  if (!exact) {
    for (const auto& prime : ranks.primes()) e.primes.push_back(prime.value());
  }
  return e;
}

BettiEntry koszul_dim(const KoszulContext& ctx, int p, int q,
                      const RankPolicy& policy) {
  DifferentialRanks ranks(ctx, policy);
  return koszul_dim(ctx, p, q, ranks);
}

BettiTable::BettiTable(IndexRange p, IndexRange q, std::vector<BettiEntry> entries,
                       std::vector<std::uint64_t> primes, std::uint64_t seed)
    : p_(p), q_(q), entries_(std::move(entries)), primes_(std::move(primes)),
      seed_(seed) {}

const BettiEntry* BettiTable::find(int p, int q) const {
  for (const auto& e : entries_) {
    if (e.p == p && e.q == q) return &e;
  }
  return nullptr;
}

BettiTable betti_table(const KoszulContext& ctx, IndexRange p, IndexRange q,
                       DifferentialRanks& ranks) {
  if (q.first < 0 || q.first > q.last || q.last > 3 || p.first < 0 ||
      p.first > p.last) {
    throw DomainError("Betti window must satisfy 0 <= q <= 3 and 0 <= p");
  }
  if (q.last + 1 > ctx.max_q()) {
    throw DomainError("context does not carry W_" + std::to_string(q.last + 1));
  }
  std::vector<std::pair<int, int>> keys;
  for (int qq = q.first; qq <= q.last; ++qq) {
    for (int pp = p.first; pp <= p.last; ++pp) {
      keys.emplace_back(pp, qq);
      keys.emplace_back(pp + 1, qq - 1);
    }
  }
  ranks.prefetch(keys);

  std::vector<BettiEntry> entries;
  bool modular = false;
  for (int qq = q.first; qq <= q.last; ++qq) {
    for (int pp = p.first; pp <= p.last; ++pp) {
      entries.push_back(koszul_dim(ctx, pp, qq, ranks));
      modular |= entries.back().certification == Certification::ModularConsensus;
    }
  }
  std::vector<std::uint64_t> primes;
  if (modular) {
    for (const auto& prime : ranks.primes()) primes.push_back(prime.value());
  }
  return BettiTable(p, q, std::move(entries), std::move(primes),
                    ranks.policy().seed);
}

BettiTable betti_table(const KoszulContext& ctx, IndexRange p, IndexRange q,
                       const RankPolicy& policy) {
  DifferentialRanks ranks(ctx, policy);
  return betti_table(ctx, p, q, ranks);
}

}  // namespace syzygy::koszul
