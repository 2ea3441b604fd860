#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace syzygy::curves {

/// x^i y^j with 0 <= j < a.
struct Monomial {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Either the projective line (a = 1) or the smooth model of y^a = f(x)
/// with gcd(a, deg f) = 1, which has a single, totally ramified point P at
/// infinity. Functions regular away from P are spanned by the monomials
/// x^i y^j (j < a), the pole order of x^i y^j at P being a*i + b*j.
class CurveModel {
 public:
  static CurveModel rational();

  /// a = 1 for the rational model.
  int a() const { return a_; }
  /// deg f; 1 for the rational model so that pole orders read a*i + b*j.
  int b() const { return b_; }
  int genus() const { return genus_; }
  bool is_rational() const { return a_ == 1; }
  /// Coefficients c0..cb of f, empty for the rational model.
  std::span<const std::int64_t> f() const { return f_; }
  /// Decimal discriminant of f; "1" for the rational model.
  const std::string& discriminant() const { return discriminant_; }

  /// p divides none of a, disc(f), lead(f): the reduction is a smooth curve
  /// of the same genus.
  bool prime_admissible(std::uint64_t p) const;

  long pole_order(Monomial m) const {
    return static_cast<long>(a_) * m.i + static_cast<long>(b_) * m.j;
  }

  /// Number of semigroup elements strictly below v, i.e. the index of a
  /// monomial of pole order v in every section basis containing it.
  std::size_t semigroup_rank(long v) const;
  bool in_semigroup(long v) const;

  friend bool operator==(const CurveModel&, const CurveModel&) = default;

 private:
  friend CurveModel build_curve(int a, std::vector<std::int64_t> f_coeffs);

  int a_ = 1;
  int b_ = 1;
  int genus_ = 0;
  std::vector<std::int64_t> f_;
  std::string discriminant_ = "1";
};

/// Validates and builds a model; a = 1 ignores f. Throws ModelInvalidError
/// naming the violated invariant.
CurveModel build_curve(int a, std::vector<std::int64_t> f_coeffs);

/// Exact discriminant of an integer polynomial (coefficients low to high),
/// as a decimal string.
std::string polynomial_discriminant(std::span<const std::int64_t> f);

/// Basis of H^0(m P) ordered by pole order.
class SectionBasis {
 public:
  SectionBasis(const CurveModel& c, int level);

  int level() const { return level_; }
  std::size_t size() const { return monomials_.size(); }
  std::span<const Monomial> monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t k) const { return monomials_[k]; }
  bool contains(Monomial m) const;

 private:
  int level_;
  std::vector<Monomial> monomials_;
};

SectionBasis section_basis(const CurveModel& c, int m);

/// Sparse coordinates (basis index, coefficient), sorted by index.
using Coordinates = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Product s*t, s in H^0(m1 P) and t in H^0(m2 P), in the basis of
/// H^0((m1+m2) P). Throws DomainError if s or t is not in its stated basis.
Coordinates multiply_monomial(const CurveModel& c, Monomial s, int m1,
                              Monomial t, int m2);

/// Gaps of the Weierstrass semigroup at P, ascending.
std::vector<int> semigroup_gaps(const CurveModel& c);

struct RiemannRochCheck {
  bool ok = true;
  std::optional<int> first_failure;
  int gap_count = 0;
};

/// Checks |basis(m)| = m + 1 - g for 2g-1 <= m <= m_max and #gaps = g.
RiemannRochCheck riemann_roch_selfcheck(const CurveModel& c, int m_max);

struct CurveDescriptor {
  int a = 1;
  int b = 1;
  int genus = 0;
  int canonical_degree = -2;
  /// Assumed gonality; see `gonality_assumption`.
  int gonality = 1;
  bool hyperelliptic = false;
  bool trigonal = false;
  /// Degree d with d P = K + g^1_3, present for trigonal models.
  std::optional<int> k_plus_g13_degree;
  std::vector<int> gaps;
  std::string gonality_assumption;
};

CurveDescriptor curve_descriptors(const CurveModel& c);

/// Parses a curve specification:
///   {"model": "rational"}
///   {"model": "superelliptic", "a": 2, "f": [1, 1, 0, 0, 0, 1]}
///   {"model": "superelliptic", "a": 3, "b": 5, "seed": 7}
/// Throws ModelInvalidError on malformed input.
CurveModel parse_curve_spec(std::string_view json_text);

/// Draws small integer coefficients from `seed` until f is squarefree.
CurveModel random_superelliptic(int a, int b, std::uint64_t seed);

/// Compact human label, e.g. "y^3 = x^5 + 2x + 1".
std::string describe(const CurveModel& c);

}  // namespace syzygy::curves
