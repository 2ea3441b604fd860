#pragma once

#include <cstdint>

namespace syzygy {

/// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n (and n < 0).
/// Exact for every value that fits in int64.
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    result = result / i * (n - k + i) + result % i * (n - k + i) / i;
  }
  return result;
}

static_assert(binomial(6, 2) == 15);
static_assert(binomial(13, 9) == 715);
static_assert(binomial(3, -1) == 0);
static_assert(binomial(3, 4) == 0);

}  // namespace syzygy
