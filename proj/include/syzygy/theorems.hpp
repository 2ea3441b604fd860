#pragma once

#include "syzygy/curves.hpp"
#include "syzygy/koszul.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace syzygy::theorems {

enum class ExpectationKind { Zero, ExactDim, NonzeroExpected, Unconstrained };

/// The statement an expectation comes from.
enum class Source {
  None,
  VanishingRows,      // K_{p,0} = 0 (p > 0), dim K_{0,0} = 1, K_{p,q} = 0 (q >= 3)
  StrandDifference,   // K_{p,2} - K_{p+1,1} depends only on (g, d)
  LastQuadratic,      // dim K_{r-1,2} = g
  LastLinear,         // K_{r-1,1} = 0 for non-rational curves
  QuadraticRange,     // K_{p,2} = 0 for p <= d - 2g - 1
  WedgeSections,      // K_{p,1} = 0 iff h^0(wedge^{r-p} E) = C(r+1, r-p)
  SecondLastLinear,   // K_{r-2,1} = 0 unless hyperelliptic or L = K + g^1_3
  ThirdLastLinear,    // K_{r-3,1} = 0 for d >= 2g+3, g >= 7, not trigonal
  ConverseNonvanishing,  // K_{r1+r2-1,1} != 0 for L = L1 (x) L2
  HighIndexVanishing,    // K_{p,q} = 0 for p >= r
};

/// Short tag used in reports: "P3.1", ..., "GL-converse", "Remark-p>=r".
std::string_view tag(Source s);
std::string_view to_string(ExpectationKind k);

struct Hypothesis {
  std::string condition;
  bool holds = false;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct Expectation {
  int p = 0;
  int q = 0;
  ExpectationKind kind = ExpectationKind::Unconstrained;
  long value = 0;  // meaningful for ExactDim
  Source source = Source::None;
  std::vector<Hypothesis> hypotheses;

  bool hypotheses_hold() const;
  /// "Zero", "ExactDim(4)", "NonzeroExpected", "Unconstrained".
  std::string describe() const;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

/// Index p* = r1 + r2 - 1 for L = (c P) (x) ((d - c) P), c the gonality of
/// the model, with r_i = h^0(L_i) - 1 counted from the semigroup.
struct ConverseIndex {
  int pencil_degree = 0;
  int r1 = 0;
  int r2 = 0;
  int index = 0;
  bool applies = false;  // r1 >= 1 and r2 >= 1
};

ConverseIndex converse_index(const curves::CurveModel& curve,
                             const koszul::LineBundleSpec& bundle);

/// Every statement whose position is (p, q), strongest first. Statements
/// whose hypotheses fail come back as Unconstrained with the failing trail.
std::vector<Expectation> predict_all(const curves::CurveModel& curve,
                                     const koszul::LineBundleSpec& bundle, int p,
                                     int q);

/// The strongest applicable expectation at (p, q). Throws HypothesisError
/// if d < 2g + 1.
Expectation predict(const curves::CurveModel& curve,
                    const koszul::LineBundleSpec& bundle, int p, int q);

/// dim K_{p,2} - dim K_{p+1,1} as a function of (g, d, p), 0 <= p <= r:
///   C(r,p)(2d+1-g) - d C(r-1,p-1) + C(r+1,p+2) - (r+1) C(r+1,p+1).
/// Throws DomainError for p outside [0, r].
long difference_value(int g, int d, int p);

/// Checks sum_j C(r-2, 2-j) C(3, j) = C(r+1, 2) and
/// sum_j C(r-3, 3-j) C(4, j) = C(r+1, 3) for every r' in [r, caps].
bool vandermonde_check(int r, int caps);

enum class Status { Pass, Fail, SkippedHypothesis, InconclusiveModular };

std::string_view to_string(Status s);

struct CheckedExpectation {
  Expectation expectation;
  long computed = 0;
  Status status = Status::SkippedHypothesis;
  linalg::Certification certification = linalg::Certification::ModularConsensus;
};

/// Strand-difference identity at index p.
struct IdentityCheck {
  int p = 0;
  long lhs = 0;  // dim K_{p,2} - dim K_{p+1,1}
  long rhs = 0;  // difference_value(g, d, p)
  Status status = Status::Pass;
};

/// h^0(wedge^p E* (x) L) = h^0(wedge^{r-p} E) recovered from dim K_{p,1}.
struct DerivedBundleDim {
  int p = 0;
  long h0_wedge = 0;       // dim K_{p,1} + C(r+1, p+1)
  long trivial_bound = 0;  // C(r+1, p+1)
};

struct VerificationReport {
  curves::CurveModel curve;
  curves::CurveDescriptor descriptor;
  koszul::LineBundleSpec bundle;
  std::vector<CheckedExpectation> entries;
  std::vector<IdentityCheck> identities;
  std::vector<DerivedBundleDim> derived;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 0;

  std::size_t count(Status s) const;
  bool any_failure() const { return count(Status::Fail) > 0; }
};

/// Recomputes an entry with exact rational ranks; nullopt when refused.
using Escalator = std::function<std::optional<koszul::BettiEntry>(int p, int q)>;

/// Applies predict_all to every entry of the table, checks the strand
/// identity wherever both neighbours are present, and derives bundle
/// section counts from the q = 1 row. Modular results that need
/// certification are passed to `escalate` when it is set.
VerificationReport verify_table(const koszul::BettiTable& table,
                                const curves::CurveModel& curve,
                                const koszul::LineBundleSpec& bundle,
                                const Escalator& escalate = {});

/// Stable-key-order JSON rendering of a report.
std::string to_json(const VerificationReport& report, int indent = 2);

}  // namespace syzygy::theorems
