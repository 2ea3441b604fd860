#include "syzygy/binomial.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/koszul.hpp"

#include "oracle/oracle.hpp"

#include <gtest/gtest.h>

using namespace syzygy;
using namespace syzygy::koszul;
using curves::build_curve;
using curves::CurveModel;

namespace {

CurveModel genus2() { return build_curve(2, {1, 1, 0, 0, 0, 1}); }
CurveModel trigonal() { return build_curve(3, {1, 2, 0, 0, 0, 1}); }

oracle::Curve to_oracle(const CurveModel& c) {
  return {c.a(), std::vector<std::int64_t>(c.f().begin(), c.f().end())};
}

std::vector<long> row(const BettiTable& t, int q) {
  std::vector<long> out;
  for (int p = t.p_range().first; p <= t.p_range().last; ++p) {
    out.push_back(t.find(p, q)->dim);
  }
  return out;
}

}  // namespace

TEST(Wedge, ColexEnds) {
  EXPECT_EQ(wedge_unrank(4, 2, 0).subset, (std::vector<int>{0, 1}));
  EXPECT_EQ(wedge_unrank(4, 2, 5).subset, (std::vector<int>{2, 3}));
  EXPECT_THROW(wedge_unrank(4, 2, 6), DomainError);
}

TEST(Wedge, RoundTrip) {
  for (std::size_t k = 0; k < static_cast<std::size_t>(binomial(6, 3)); ++k) {
    const auto w = wedge_unrank(6, 3, k);
    EXPECT_EQ(w.position, k);
    EXPECT_EQ(wedge_rank(w.subset), k);
    EXPECT_TRUE(std::is_sorted(w.subset.begin(), w.subset.end()));
  }
}

TEST(Bundle, Hypothesis) {
  EXPECT_THROW(make_bundle(genus2(), 4), HypothesisError);
  const auto b = make_bundle(genus2(), 5);
  EXPECT_EQ(b.r, 3);
  EXPECT_THROW(KoszulContext(trigonal(), 8), HypothesisError);
}

TEST(Differential, Shapes) {
  const KoszulContext ctx(CurveModel::rational(), 3);
  const auto d10 = build_differential(ctx, 1, 0);
  EXPECT_EQ(d10.rows(), 4u);
  EXPECT_EQ(d10.cols(), 4u);
  EXPECT_EQ(linalg::rank_exact(d10).rank, 4u);

  const auto d0 = build_differential(ctx, 0, 2);
  EXPECT_EQ(d0.rows(), 0u);
  EXPECT_EQ(d0.cols(), ctx.section_dim(2));

  const auto d11 = build_differential(ctx, 1, 1);
  EXPECT_EQ(d11.rows(), 7u);
  EXPECT_EQ(d11.cols(), 16u);
  EXPECT_EQ(linalg::rank_mod_p(d11, 2147483647ULL), 7u);

  EXPECT_THROW(build_differential(ctx, 5, 0), DomainError);
  EXPECT_THROW(build_differential(ctx, 1, 4), DomainError);
}

TEST(Differential, SquaresToZero) {
  for (const auto& [curve, d] :
       {std::pair{CurveModel::rational(), 4}, {CurveModel::rational(), 5},
        {genus2(), 5}, {genus2(), 6}, {trigonal(), 9}}) {
    const KoszulContext ctx(curve, d);
    for (int q = 0; q <= 2; ++q) {
      for (int p = 2; p <= ctx.bundle().r + 1; ++p) {
        const auto dd = linalg::multiply(build_differential(ctx, p - 1, q + 1),
                                         build_differential(ctx, p, q));
        EXPECT_EQ(dd.nonzeros(), 0u) << "p=" << p << " q=" << q << " d=" << d;
      }
    }
  }
}

TEST(Koszul, TwistedCubic) {
  const KoszulContext ctx(CurveModel::rational(), 3);
  const auto t = betti_table(ctx, {0, 3}, {0, 3}, RankPolicy{});
  EXPECT_EQ(row(t, 0), (std::vector<long>{1, 0, 0, 0}));
  EXPECT_EQ(row(t, 1), (std::vector<long>{0, 3, 2, 0}));
  EXPECT_EQ(row(t, 2), (std::vector<long>{0, 0, 0, 0}));
  EXPECT_EQ(row(t, 3), (std::vector<long>{0, 0, 0, 0}));
}

TEST(Koszul, RationalQuartic) {
  const KoszulContext ctx(CurveModel::rational(), 4);
  const auto t = betti_table(ctx, {1, 3}, {1, 1}, RankPolicy{});
  EXPECT_EQ(row(t, 1), (std::vector<long>{6, 8, 3}));
}

TEST(Koszul, GenusTwoLastQuadratic) {
  const KoszulContext ctx(genus2(), 5);
  RankPolicy policy;
  policy.mode = RankMode::ExactBelowCap;
  const auto e = koszul_dim(ctx, 2, 2, policy);
  EXPECT_EQ(e.dim, 2);
  EXPECT_EQ(e.certification, linalg::Certification::ExactRational);
}

TEST(Koszul, RankCaching) {
  const KoszulContext ctx(CurveModel::rational(), 4);
  DifferentialRanks ranks(ctx, RankPolicy{});
  koszul_dim(ctx, 2, 1, ranks);  // d_{2,1}, d_{3,0}
  koszul_dim(ctx, 3, 0, ranks);  // d_{3,0}, d_{4,-1} trivial
  koszul_dim(ctx, 1, 2, ranks);  // d_{1,2}, d_{2,1}
  EXPECT_EQ(ranks.computations(), 3u);
  koszul_dim(ctx, 2, 1, ranks);
  EXPECT_EQ(ranks.computations(), 3u);
}

TEST(Koszul, EulerCharacteristic) {
  for (const auto& [curve, d] : {std::pair{CurveModel::rational(), 5},
                                 {genus2(), 6}, {trigonal(), 9}}) {
    const KoszulContext ctx(curve, d);
    const int r = ctx.bundle().r;
    const auto t = betti_table(ctx, {0, r + 1}, {0, 3}, RankPolicy{});
    for (int n = 0; n <= 3; ++n) {
      long chain = 0, homology = 0;
      for (int q = 0; q <= n; ++q) {
        const int p = n - q;
        if (p > r + 1) continue;
        const long sign = p % 2 ? -1 : 1;
        chain += sign * static_cast<long>(ctx.middle_dim(p, q));
        homology += sign * t.find(p, q)->dim;
      }
      EXPECT_EQ(chain, homology) << "n=" << n << " d=" << d;
    }
  }
}

TEST(Koszul, MatchesDenseOracle) {
  for (const auto& [curve, d] :
       {std::pair{CurveModel::rational(), 3}, {CurveModel::rational(), 4},
        {genus2(), 5}, {build_curve(3, {1, 0, 0, 1, 1}), 7}}) {
    const KoszulContext ctx(curve, d);
    const int r = ctx.bundle().r;
    const auto t = betti_table(ctx, {0, r + 1}, {0, 3}, RankPolicy{});
    const auto expected = oracle::betti(to_oracle(curve), d);
    for (int q = 0; q <= 3; ++q) {
      for (int p = 0; p <= r + 1; ++p) {
        EXPECT_EQ(t.find(p, q)->dim, expected[q][p])
            << curves::describe(curve) << " d=" << d << " (" << p << "," << q << ")";
      }
    }
  }
}

TEST(Koszul, ParallelMatchesSerial) {
  const KoszulContext ctx(trigonal(), 10);
  RankPolicy serial, parallel;
  parallel.jobs = 8;
  const auto a = betti_table(ctx, {0, 7}, {0, 3}, serial);
  const auto b = betti_table(ctx, {0, 7}, {0, 3}, parallel);
  ASSERT_EQ(a.entries().size(), b.entries().size());
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    EXPECT_EQ(a.entries()[k].dim, b.entries()[k].dim);
    EXPECT_EQ(a.entries()[k].rank_out, b.entries()[k].rank_out);
  }
  EXPECT_TRUE(std::equal(a.primes().begin(), a.primes().end(), b.primes().begin(),
                         b.primes().end()));
}

TEST(Koszul, ExactAndConsensusAgree) {
  const KoszulContext ctx(genus2(), 6);
  RankPolicy exact;
  exact.mode = RankMode::ExactBelowCap;
  const auto a = betti_table(ctx, {0, 5}, {0, 2}, RankPolicy{});
  const auto b = betti_table(ctx, {0, 5}, {0, 2}, exact);
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    EXPECT_EQ(a.entries()[k].dim, b.entries()[k].dim);
    EXPECT_EQ(b.entries()[k].certification, linalg::Certification::ExactRational);
  }
}

TEST(Koszul, RejectsBadWindows) {
  const KoszulContext ctx(CurveModel::rational(), 3);
  EXPECT_THROW(betti_table(ctx, {0, 3}, {0, 4}, RankPolicy{}), DomainError);
  EXPECT_THROW(betti_table(ctx, {2, 1}, {0, 3}, RankPolicy{}), DomainError);
}
