#include "syzygy/curves.hpp"
#include "syzygy/errors.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>
#include <utility>

namespace syzygy::curves {

namespace {

// Bareiss determinant of a square integer matrix.
mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::uint64_t decimal_mod(const std::string& s, std::uint64_t p) {
  unsigned __int128 r = 0;
  for (char ch : s) {
    if (ch == '-') continue;
    r = (r * 10 + static_cast<unsigned>(ch - '0')) % p;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::string polynomial_discriminant(std::span<const std::int64_t> f) {
  if (f.size() < 2) return "0";
  const std::size_t n = f.size() - 1;
  if (n == 1) return "1";
  // Sylvester matrix of f (degree n) and f' (degree n-1)
  std::vector<mpz_class> df(n);
  for (std::size_t k = 1; k <= n; ++k) {
    df[k - 1] = mpz_class(static_cast<long>(f[k])) * static_cast<long>(k);
  }
  const std::size_t size = 2 * n - 1;
  std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size));
  for (std::size_t row = 0; row < n - 1; ++row) {
    for (std::size_t k = 0; k <= n; ++k) {
      s[row][row + k] = static_cast<long>(f[n - k]);
    }
  }
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k < n; ++k) {
      s[n - 1 + row][row + k] = df[n - 1 - k];
    }
  }
  mpz_class disc = determinant(std::move(s));
  mpz_divexact(disc.get_mpz_t(), disc.get_mpz_t(),
               mpz_class(static_cast<long>(f[n])).get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc.get_str();
}

CurveModel CurveModel::rational() { return build_curve(1, {}); }

CurveModel build_curve(int a, std::vector<std::int64_t> f_coeffs) {
  CurveModel c;
  if (a < 1) throw ModelInvalidError("cover degree a must be >= 1");
  if (a == 1) return c;

  if (f_coeffs.empty() || f_coeffs.back() == 0) {
    throw ModelInvalidError("leading coefficient of f must be nonzero");
  }
  const int b = static_cast<int>(f_coeffs.size()) - 1;
  if (b < 3) throw ModelInvalidError("deg f must be >= 3 when a >= 2");
  std::string disc = polynomial_discriminant(f_coeffs);
  if (disc == "0") throw ModelInvalidError("f not squarefree");
  if (std::gcd(a, b) != 1) {
    throw ModelInvalidError("gcd(a, deg f) must be 1 (a=" + std::to_string(a) +
                            ", deg f=" + std::to_string(b) + ")");
  }

  c.a_ = a;
  c.b_ = b;
  c.genus_ = (a - 1) * (b - 1) / 2;
  c.f_ = std::move(f_coeffs);
  c.discriminant_ = std::move(disc);
  return c;
}

bool CurveModel::prime_admissible(std::uint64_t p) const {
  if (is_rational()) return true;
  if (static_cast<std::uint64_t>(a_) % p == 0) return false;
  const auto lead = static_cast<std::uint64_t>(f_.back() < 0 ? -f_.back() : f_.back());
  if (lead % p == 0) return false;
  return decimal_mod(discriminant_, p) != 0;
}

std::size_t CurveModel::semigroup_rank(long v) const {
  if (v <= 0) return 0;
  // elements a*i + b*j < v with j < a are distinct, count per j
  std::size_t count = 0;
  for (long j = 0; j < a_; ++j) {
    const long rest = v - static_cast<long>(b_) * j;
    if (rest > 0) count += static_cast<std::size_t>((rest + a_ - 1) / a_);
  }
  return count;
}

bool CurveModel::in_semigroup(long v) const {
  if (v < 0) return false;
  for (long j = 0; j < a_; ++j) {
    const long rest = v - static_cast<long>(b_) * j;
    if (rest >= 0 && rest % a_ == 0) return true;
  }
  return false;
}

std::string describe(const CurveModel& c) {
  if (c.is_rational()) return "P^1";
  std::ostringstream out;
  out << "y^" << c.a() << " =";
  bool first = true;
  const auto f = c.f();
  for (std::size_t k = f.size(); k-- > 0;) {
    const std::int64_t coeff = f[k];
    if (coeff == 0) continue;
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    out << (first ? (coeff < 0 ? " -" : " ") : (coeff < 0 ? " - " : " + "));
    first = false;
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

}  // namespace syzygy::curves
