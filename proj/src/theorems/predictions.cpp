#include "syzygy/theorems.hpp"

#include "syzygy/binomial.hpp"
#include "syzygy/errors.hpp"

#include <algorithm>
#include <string>

namespace syzygy::theorems {

using curves::CurveModel;
using koszul::LineBundleSpec;

std::string_view tag(Source s) {
  switch (s) {
    case Source::None: return "none";
    case Source::VanishingRows: return "P3.1";
    case Source::StrandDifference: return "P3.2";
    case Source::LastQuadratic: return "P3.3";
    case Source::LastLinear: return "P3.4";
    case Source::QuadraticRange: return "P3.5";
    case Source::WedgeSections: return "P3.6-lemma";
    case Source::SecondLastLinear: return "P3.7";
    case Source::ThirdLastLinear: return "P3.8";
    case Source::ConverseNonvanishing: return "GL-converse";
    case Source::HighIndexVanishing: return "Remark-p>=r";
  }
  return "?";
}

std::string_view to_string(ExpectationKind k) {
  switch (k) {
    case ExpectationKind::Zero: return "Zero";
    case ExpectationKind::ExactDim: return "ExactDim";
    case ExpectationKind::NonzeroExpected: return "NonzeroExpected";
    case ExpectationKind::Unconstrained: return "Unconstrained";
  }
  return "?";
}

bool Expectation::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.holds; });
}

std::string Expectation::describe() const {
  if (kind == ExpectationKind::ExactDim) {
    return "ExactDim(" + std::to_string(value) + ")";
  }
  return std::string(to_string(kind));
}

ConverseIndex converse_index(const CurveModel& curve,
                             const LineBundleSpec& bundle) {
  ConverseIndex ci;
  ci.pencil_degree = curves::curve_descriptors(curve).gonality;
  // h^0(m P) is the number of semigroup elements <= m, valid in every degree
  auto h0 = [&](int m) {
    return m < 0 ? 0 : static_cast<int>(curve.semigroup_rank(m + 1));
  };
  ci.r1 = h0(ci.pencil_degree) - 1;
  ci.r2 = h0(bundle.d - ci.pencil_degree) - 1;
  ci.index = ci.r1 + ci.r2 - 1;
  ci.applies = ci.r1 >= 1 && ci.r2 >= 1;
  return ci;
}

std::vector<Expectation> predict_all(const CurveModel& curve,
                                     const LineBundleSpec& bundle, int p, int q) {
  const int g = curve.genus();
  const int d = bundle.d;
  const int r = bundle.r;
  const auto desc = curves::curve_descriptors(curve);
  const Hypothesis degree{"d >= 2g+1", d >= 2 * g + 1};

  std::vector<Expectation> out;
  auto add = [&](Source source, ExpectationKind claim, long value,
                 std::vector<Hypothesis> hypotheses) {
    Expectation e;
    e.p = p;
    e.q = q;
    e.source = source;
    e.value = value;
    e.hypotheses = std::move(hypotheses);
    e.kind = e.hypotheses_hold() ? claim : ExpectationKind::Unconstrained;
    out.push_back(std::move(e));
  };

  if (q == 0 && p > 0) add(Source::VanishingRows, ExpectationKind::Zero, 0, {degree});
  if (q == 0 && p == 0) {
    add(Source::VanishingRows, ExpectationKind::ExactDim, 1, {degree});
  }
  if (q >= 3) add(Source::VanishingRows, ExpectationKind::Zero, 0, {degree});
  if (p >= r) add(Source::HighIndexVanishing, ExpectationKind::Zero, 0, {degree});
  if (q == 2 && p == r - 1) {
    add(Source::LastQuadratic, ExpectationKind::ExactDim, g, {degree});
  }
  if (q == 1 && p == r - 1) {
    add(Source::LastLinear, ExpectationKind::Zero, 0,
        {degree, {"non-rational (g >= 1)", g >= 1}});
  }
  if (q == 2 && p <= d - 2 * g - 1) {
    add(Source::QuadraticRange, ExpectationKind::Zero, 0,
        {degree, {"p <= k = d-2g-1 = " + std::to_string(d - 2 * g - 1), true}});
  }
  if (q == 1 && p == r - 2) {
    add(Source::SecondLastLinear, ExpectationKind::Zero, 0,
        {degree,
         {"g >= 4", g >= 4},
         {"not hyperelliptic", !desc.hyperelliptic},
         {"not (trigonal and L = K + g^1_3, i.e. d = 2g+1)",
          !(desc.trigonal && d == 2 * g + 1)}});
  }
  if (q == 1 && p == r - 3) {
    add(Source::ThirdLastLinear, ExpectationKind::Zero, 0,
        {{"d >= 2g+3", d >= 2 * g + 3},
         {"g >= 7", g >= 7},
         {"gonality >= 4 (neither hyperelliptic nor trigonal)",
          desc.gonality >= 4}});
  }
  const ConverseIndex ci = converse_index(curve, bundle);
  if (q == 1 && p == ci.index) {
    const std::string split = "L = " + std::to_string(ci.pencil_degree) +
                              "P + " + std::to_string(d - ci.pencil_degree) + "P";
    add(Source::ConverseNonvanishing, ExpectationKind::NonzeroExpected, 0,
        {{split + ": r1 = " + std::to_string(ci.r1) + " >= 1", ci.r1 >= 1},
         {split + ": r2 = " + std::to_string(ci.r2) + " >= 1", ci.r2 >= 1}});
  }

  std::stable_partition(out.begin(), out.end(), [](const Expectation& e) {
    return e.kind != ExpectationKind::Unconstrained;
  });
  return out;
}

Expectation predict(const CurveModel& curve, const LineBundleSpec& bundle, int p,
                    int q) {
  const int g = curve.genus();
  if (bundle.d < 2 * g + 1) {
    throw HypothesisError("degree d=" + std::to_string(bundle.d) +
                          " is below 2g+1=" + std::to_string(2 * g + 1));
  }
  auto all = predict_all(curve, bundle, p, q);
  if (!all.empty()) return all.front();
  Expectation none;
  none.p = p;
  none.q = q;
  return none;
}

long difference_value(int g, int d, int p) {
  const long r = d - g;
  if (p < 0 || p > r) {
    throw DomainError("difference_value needs 0 <= p <= r, got p=" +
                      std::to_string(p));
  }
  // C(r,p) * p d / r is rewritten as d * C(r-1, p-1)
  return binomial(r, p) * (2L * d + 1 - g) - d * binomial(r - 1, p - 1) +
         binomial(r + 1, p + 2) - (r + 1) * binomial(r + 1, p + 1);
}

bool vandermonde_check(int r, int caps) {
  for (long n = std::max(r, 4); n <= caps; ++n) {
    long pairs = 0;
    for (long j = 0; j <= 2; ++j) pairs += binomial(n - 2, 2 - j) * binomial(3, j);
    long triples = 0;
    for (long j = 0; j <= 3; ++j) triples += binomial(n - 3, 3 - j) * binomial(4, j);
    if (pairs != binomial(n + 1, 2) || triples != binomial(n + 1, 3)) return false;
  }
  return true;
}

}  // namespace syzygy::theorems
