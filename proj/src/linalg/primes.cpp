#include "syzygy/errors.hpp"
#include "syzygy/linalg.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace syzygy::linalg {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

constexpr std::uint64_t kSampleLow = std::uint64_t{1} << 30;
constexpr std::uint64_t kSampleHigh = std::uint64_t{1} << 31;
constexpr std::size_t kMaxDraws = 4096;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these witnesses are exact for all n < 2^64
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p, bool admissible)
    : p_(p), admissible_(admissible) {
  if (p <= kFloor || p >= kCeiling || !is_prime(p)) {
    throw InvalidModulusError("sampled modulus " + std::to_string(p) +
                              " must be a prime in (2^20, 2^62)");
  }
}

std::vector<PrimeModulus> sample_primes(std::size_t count, std::uint64_t seed,
                                        const Admissibility& admissible) {
  std::mt19937_64 rng(seed);
  std::vector<PrimeModulus> primes;
  std::size_t draws = 0;
  while (primes.size() < count) {
    if (++draws > kMaxDraws) {
      throw PrimeExhaustionError("found only " + std::to_string(primes.size()) +
                                 " of " + std::to_string(count) +
                                 " admissible primes after " +
                                 std::to_string(kMaxDraws) + " draws");
    }
    // mt19937_64 output is fixed by the standard; the reduction below keeps
    // the stream identical across standard libraries.
    std::uint64_t candidate = kSampleLow + rng() % (kSampleHigh - kSampleLow);
    while (!is_prime(candidate)) {
      if (++candidate >= kSampleHigh) candidate = kSampleLow;
    }
    if (admissible && !admissible(candidate)) continue;
    bool seen = std::any_of(primes.begin(), primes.end(), [&](const auto& q) {
      return q.value() == candidate;
    });
    if (!seen) primes.emplace_back(candidate, true);
  }
  return primes;
}

RankResult rank_consensus(const IntegerSparseMatrix& m,
                          std::span<const PrimeModulus> primes) {
  if (primes.empty()) {
    throw PrimeExhaustionError("consensus rank needs at least one prime");
  }
  RankResult result;
  result.certified = Certification::ModularConsensus;
  for (const auto& p : primes) {
    result.rank = std::max(result.rank, rank_mod_p(m, p.value()));
    result.primes_used.push_back(p);
  }
  return result;
}

RankResult rank_consensus(const IntegerSparseMatrix& m, std::size_t prime_count,
                          std::uint64_t seed, const Admissibility& admissible) {
  if (prime_count == 0) {
    throw PrimeExhaustionError("consensus rank needs at least one prime");
  }
  const auto primes = sample_primes(prime_count, seed, admissible);
  return rank_consensus(m, primes);
}

}  // namespace syzygy::linalg
