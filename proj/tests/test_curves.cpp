#include "syzygy/curves.hpp"
#include "syzygy/errors.hpp"

#include "oracle/oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace syzygy;
using namespace syzygy::curves;

namespace {

CurveModel genus2() { return build_curve(2, {1, 1, 0, 0, 0, 1}); }
CurveModel trigonal() { return build_curve(3, {1, 2, 0, 0, 0, 1}); }
CurveModel genus9() { return build_curve(4, {1, 1, 0, 0, 0, 0, 0, 1}); }

using Poly = std::map<Monomial, std::int64_t>;

// Coordinates at `level` times monomial u of level lu, expanded term by term.
Poly times(const CurveModel& c, const Coordinates& s, int level, Monomial u, int lu) {
  const SectionBasis basis(c, level);
  const SectionBasis target(c, level + lu);
  Poly out;
  for (const auto& [idx, coeff] : s) {
    for (const auto& [k, v] : multiply_monomial(c, basis[idx], level, u, lu)) {
      out[target[k]] += coeff * v;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Monomial random_monomial(const CurveModel& c, std::mt19937_64& rng, int level) {
  const SectionBasis basis(c, level);
  return basis[rng() % basis.size()];
}

}  // namespace

TEST(Model, Genus) {
  EXPECT_EQ(genus2().genus(), 2);
  EXPECT_EQ(trigonal().genus(), 4);
  EXPECT_EQ(genus9().genus(), 9);
  EXPECT_EQ(CurveModel::rational().genus(), 0);
}

TEST(Model, RejectsBadInput) {
  try {
    build_curve(2, {1, 0, 2, 0, 1});
    FAIL() << "expected ModelInvalidError";
  } catch (const ModelInvalidError& e) {
    EXPECT_STREQ(e.what(), "f not squarefree");
  }
  EXPECT_THROW(build_curve(2, {1, 0, 0, 0, 0, 0, 1}), ModelInvalidError);  // gcd
  EXPECT_THROW(build_curve(3, {1, 1, 0}), ModelInvalidError);
  EXPECT_THROW(build_curve(0, {}), ModelInvalidError);
  EXPECT_THROW(build_curve(2, {1, 1, 0, 0}), ModelInvalidError);  // lead 0
}

TEST(Model, Discriminant) {
  const std::vector<std::int64_t> cubic{0, -1, 0, 1};  // x^3 - x
  EXPECT_EQ(polynomial_discriminant(cubic), "4");
  const std::vector<std::int64_t> depressed{2, -3, 0, 1};  // -4(-3)^3 - 27*4
  EXPECT_EQ(polynomial_discriminant(depressed), "0");
  EXPECT_EQ(trigonal().discriminant(), polynomial_discriminant(trigonal().f()));
}

TEST(Model, PrimeAdmissibility) {
  const auto c = trigonal();
  EXPECT_FALSE(c.prime_admissible(3));
  EXPECT_TRUE(c.prime_admissible(2147483647ULL));
  EXPECT_TRUE(CurveModel::rational().prime_admissible(2));
}

TEST(Sections, SpecBases) {
  const SectionBasis b(genus2(), 5);
  const std::vector<Monomial> expected{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
  EXPECT_EQ(std::vector<Monomial>(b.monomials().begin(), b.monomials().end()),
            expected);
  EXPECT_EQ(SectionBasis(CurveModel::rational(), 3).size(), 4u);
  EXPECT_EQ(SectionBasis(trigonal(), 9).size(), 6u);
  EXPECT_THROW(SectionBasis(genus2(), -1), DomainError);
}

TEST(Sections, IndexIsSemigroupRank) {
  for (const auto& c : {genus2(), trigonal(), genus9(), CurveModel::rational()}) {
    for (int m = 0; m <= 60; ++m) {
      const SectionBasis b(c, m);
      std::size_t count = 0;
      for (int v = 0; v <= m; ++v) count += c.in_semigroup(v);
      ASSERT_EQ(b.size(), count);
      for (std::size_t k = 0; k < b.size(); ++k) {
        EXPECT_EQ(c.semigroup_rank(c.pole_order(b[k])), k);
        EXPECT_TRUE(b.contains(b[k]));
      }
    }
  }
}

TEST(Sections, DefiningRelation) {
  const auto c = genus2();
  // y * y = x^5 + x + 1 in H^0(10P)
  const Coordinates expected{{0, 1}, {1, 1}, {c.semigroup_rank(10), 1}};
  EXPECT_EQ(multiply_monomial(c, {0, 1}, 5, {0, 1}, 5), expected);

  const auto t = trigonal();
  const auto prod = multiply_monomial(t, {0, 1}, 5, {0, 2}, 10);
  const SectionBasis target(t, 15);
  Poly got;
  for (const auto& [k, v] : prod) got[target[k]] = v;
  EXPECT_EQ(got, (Poly{{{0, 0}, 1}, {{1, 0}, 2}, {{5, 0}, 1}}));
}

TEST(Sections, PowersOfX) {
  const auto c = trigonal();
  const auto prod = multiply_monomial(c, {2, 0}, 6, {3, 0}, 9);
  ASSERT_EQ(prod.size(), 1u);
  EXPECT_EQ(prod[0].second, 1);
  EXPECT_EQ(SectionBasis(c, 15)[prod[0].first], (Monomial{5, 0}));
}

TEST(Sections, RejectsMonomialOutsideBasis) {
  EXPECT_THROW(multiply_monomial(genus2(), {3, 0}, 5, {0, 0}, 5), DomainError);
  EXPECT_THROW(multiply_monomial(genus2(), {0, 2}, 10, {0, 0}, 5), DomainError);
}

TEST(Sections, AssociativeCommutativeAndPoleAdditive) {
  std::mt19937_64 rng(2024);
  for (const auto& c : {genus2(), trigonal(), genus9()}) {
    const int L = 2 * c.genus() + 3;
    for (int t = 0; t < 1000; ++t) {
      const int l1 = L * (1 + rng() % 2), l2 = L, l3 = L * (1 + rng() % 2);
      const Monomial s = random_monomial(c, rng, l1);
      const Monomial u = random_monomial(c, rng, l2);
      const Monomial w = random_monomial(c, rng, l3);

      const Coordinates su = multiply_monomial(c, s, l1, u, l2);
      const Coordinates us = multiply_monomial(c, u, l2, s, l1);
      ASSERT_EQ(su, us);

      const Poly left = times(c, su, l1 + l2, w, l3);
      const Coordinates uw = multiply_monomial(c, u, l2, w, l3);
      const Poly right = times(c, uw, l2 + l3, s, l1);
      ASSERT_EQ(left, right) << "trial " << t;

      const SectionBasis target(c, l1 + l2);
      long top = -1;
      for (const auto& [k, v] : su) top = std::max(top, c.pole_order(target[k]));
      EXPECT_EQ(top, c.pole_order(s) + c.pole_order(u));
    }
  }
}

TEST(Semigroup, GapsMatchBruteForce) {
  EXPECT_EQ(semigroup_gaps(trigonal()), (std::vector<int>{1, 2, 4, 7}));
  EXPECT_EQ(semigroup_gaps(genus2()), (std::vector<int>{1, 3}));
  EXPECT_EQ(semigroup_gaps(genus9()).size(), 9u);
  EXPECT_TRUE(semigroup_gaps(CurveModel::rational()).empty());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (auto [a, b] : {std::pair{2, 7}, {3, 7}, {4, 5}, {5, 6}, {3, 8}}) {
      const auto c = random_superelliptic(a, b, seed);
      const oracle::Curve o{a, std::vector<std::int64_t>(c.f().begin(), c.f().end())};
      EXPECT_EQ(semigroup_gaps(c), oracle::gaps(o));
      EXPECT_EQ(c.genus(), oracle::genus(o));
    }
  }
}

TEST(RiemannRoch, SelfCheck) {
  const auto r2 = riemann_roch_selfcheck(genus2(), 20);
  EXPECT_TRUE(r2.ok);
  EXPECT_EQ(r2.gap_count, 2);
  EXPECT_TRUE(riemann_roch_selfcheck(CurveModel::rational(), 10).ok);
  const auto r9 = riemann_roch_selfcheck(genus9(), 42);
  EXPECT_TRUE(r9.ok);
  EXPECT_EQ(r9.gap_count, 9);
  EXPECT_FALSE(r9.first_failure.has_value());
}

TEST(Descriptors, Gonality) {
  const auto t = curve_descriptors(trigonal());
  EXPECT_EQ(t.genus, 4);
  EXPECT_EQ(t.canonical_degree, 6);
  EXPECT_TRUE(t.trigonal);
  EXPECT_FALSE(t.hyperelliptic);
  EXPECT_EQ(t.k_plus_g13_degree, 9);

  EXPECT_TRUE(curve_descriptors(genus2()).hyperelliptic);
  EXPECT_TRUE(curve_descriptors(build_curve(2, {1, 1, 0, 0, 0, 0, 0, 1})).hyperelliptic);

  const auto n = curve_descriptors(genus9());
  EXPECT_EQ(n.genus, 9);
  EXPECT_EQ(n.gonality, 4);
  EXPECT_FALSE(n.trigonal);
  EXPECT_FALSE(n.k_plus_g13_degree.has_value());
  EXPECT_FALSE(n.gonality_assumption.empty());
}

TEST(Spec, Parsing) {
  EXPECT_EQ(parse_curve_spec(R"({"model": "rational"})"), CurveModel::rational());
  EXPECT_EQ(parse_curve_spec(R"({"model": "superelliptic", "a": 2, "f": [1, 1, 0, 0, 0, 1]})"),
            genus2());
  const auto seeded = R"({"model": "superelliptic", "a": 3, "b": 7, "seed": 4})";
  EXPECT_EQ(parse_curve_spec(seeded), parse_curve_spec(seeded));
  EXPECT_EQ(parse_curve_spec(seeded).genus(), 6);
  EXPECT_THROW(parse_curve_spec("{"), ModelInvalidError);
  EXPECT_THROW(parse_curve_spec(R"({"model": "quartic"})"), ModelInvalidError);
  EXPECT_THROW(parse_curve_spec(R"({"model": "superelliptic", "a": 2})"),
               ModelInvalidError);
  EXPECT_THROW(parse_curve_spec(R"({"model": "superelliptic", "a": 2, "f": [1, 0, 2, 0, 1]})"),
               ModelInvalidError);
}

TEST(Spec, Describe) {
  EXPECT_EQ(describe(trigonal()), "y^3 = x^5 + 2x + 1");
  EXPECT_EQ(describe(CurveModel::rational()), "P^1");
}
