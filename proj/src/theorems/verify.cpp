#include "syzygy/theorems.hpp"

#include "syzygy/binomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace syzygy::theorems {

using koszul::BettiEntry;
using linalg::Certification;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::SkippedHypothesis: return "SKIPPED-hypothesis";
    case Status::InconclusiveModular: return "INCONCLUSIVE-modular";
  }
  return "?";
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.status == s;
  for (const auto& i : identities) n += i.status == s;
  return n;
}

namespace {

// Best known value per position; modular entries are upgraded on demand.
class EntryBook {
 public:
  EntryBook(const koszul::BettiTable& table, const Escalator& escalate)
      : escalate_(escalate) {
    for (const auto& e : table.entries()) entries_[{e.p, e.q}] = e;
  }

  const BettiEntry* get(int p, int q) const {
    auto it = entries_.find({p, q});
    return it == entries_.end() ? nullptr : &it->second;
  }

  /// Replaces a modular entry by its exact value when possible. Returns
  /// false if the entry stays modular.
  bool certify(int p, int q) {
    auto it = entries_.find({p, q});
    if (it == entries_.end()) return false;
    if (it->second.certification == Certification::ExactRational) return true;
    if (!escalate_ || refused_.contains({p, q})) return false;
    auto exact = escalate_(p, q);
    if (!exact) {
      refused_.insert({{p, q}, true});
      return false;
    }
    it->second = *exact;
    return true;
  }

 private:
  const Escalator& escalate_;
  std::map<std::pair<int, int>, BettiEntry> entries_;
  std::map<std::pair<int, int>, bool> refused_;
};

CheckedExpectation check(const Expectation& exp, EntryBook& book) {
  CheckedExpectation out;
  out.expectation = exp;
  const BettiEntry* e = book.get(exp.p, exp.q);
  auto refresh = [&] {
    e = book.get(exp.p, exp.q);
    out.computed = e->dim;
    out.certification = e->certification;
  };
  refresh();

  switch (exp.kind) {
    case ExpectationKind::Unconstrained:
      out.status = Status::SkippedHypothesis;
      break;
    case ExpectationKind::Zero:
    case ExpectationKind::ExactDim: {
      const long expected = exp.kind == ExpectationKind::Zero ? 0 : exp.value;
      if (out.computed == expected) {
        out.status = Status::Pass;
      } else if (book.certify(exp.p, exp.q)) {
        refresh();
        out.status = out.computed == expected ? Status::Pass : Status::Fail;
      } else {
        // mod-p dimensions only overshoot, so an undershoot is conclusive
        out.status = out.computed < expected ? Status::Fail
                                             : Status::InconclusiveModular;
      }
      break;
    }
    case ExpectationKind::NonzeroExpected:
      if (out.computed == 0) {
        out.status = Status::Fail;
      } else if (book.certify(exp.p, exp.q)) {
        refresh();
        out.status = out.computed != 0 ? Status::Pass : Status::Fail;
      } else {
        out.status = Status::InconclusiveModular;
      }
      break;
  }
  return out;
}

}  // namespace

VerificationReport verify_table(const koszul::BettiTable& table,
                                const curves::CurveModel& curve,
                                const koszul::LineBundleSpec& bundle,
                                const Escalator& escalate) {
  VerificationReport report;
  report.curve = curve;
  report.descriptor = curves::curve_descriptors(curve);
  report.bundle = bundle;
  report.primes.assign(table.primes().begin(), table.primes().end());
  report.seed = table.seed();

  EntryBook book(table, escalate);
  for (const auto& entry : table.entries()) {
    auto expectations = predict_all(curve, bundle, entry.p, entry.q);
    if (expectations.empty()) {
      Expectation none;
      none.p = entry.p;
      none.q = entry.q;
      expectations.push_back(none);
    }
    for (const auto& exp : expectations) report.entries.push_back(check(exp, book));
  }

  const int g = curve.genus();
  const int r = bundle.r;
  for (int p = 0; p <= r; ++p) {
    const BettiEntry* quad = book.get(p, 2);
    const BettiEntry* lin = book.get(p + 1, 1);
    if (!quad || !lin) continue;
    IdentityCheck id;
    id.p = p;
    id.rhs = difference_value(g, bundle.d, p);
    id.lhs = quad->dim - lin->dim;
    if (id.lhs != id.rhs) {
      const bool exact = book.certify(p, 2) && book.certify(p + 1, 1);
      id.lhs = book.get(p, 2)->dim - book.get(p + 1, 1)->dim;
      id.status = id.lhs == id.rhs ? Status::Pass
                  : exact          ? Status::Fail
                                   : Status::InconclusiveModular;
    }
    report.identities.push_back(id);
  }

  for (const auto& entry : table.entries()) {
    if (entry.q != 1 || entry.p > r) continue;
    const BettiEntry* best = book.get(entry.p, 1);
    DerivedBundleDim dim;
    dim.p = entry.p;
    dim.trivial_bound = binomial(r + 1, entry.p + 1);
    dim.h0_wedge = best->dim + dim.trivial_bound;
    report.derived.push_back(dim);
  }
  return report;
}

std::string to_json(const VerificationReport& report, int indent) {
  using nlohmann::ordered_json;
  const auto& desc = report.descriptor;

  ordered_json curve;
  curve["model"] = report.curve.is_rational() ? "rational" : "superelliptic";
  curve["a"] = desc.a;
  curve["b"] = desc.b;
  curve["f"] = std::vector<std::int64_t>(report.curve.f().begin(),
                                          report.curve.f().end());
  curve["equation"] = curves::describe(report.curve);
  curve["genus"] = desc.genus;
  curve["canonical_degree"] = desc.canonical_degree;
  curve["gonality"] = desc.gonality;
  curve["hyperelliptic"] = desc.hyperelliptic;
  curve["trigonal"] = desc.trigonal;
  curve["k_plus_g13_degree"] =
      desc.k_plus_g13_degree ? ordered_json(*desc.k_plus_g13_degree) : ordered_json();
  curve["gaps"] = desc.gaps;
  curve["gonality_assumption"] = desc.gonality_assumption;

  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json hyps = ordered_json::array();
    for (const auto& h : e.expectation.hypotheses) {
      hyps.push_back({{"condition", h.condition}, {"holds", h.holds}});
    }
    entries.push_back({{"p", e.expectation.p},
                       {"q", e.expectation.q},
                       {"expected", e.expectation.describe()},
                       {"computed", e.computed},
                       {"status", to_string(e.status)},
                       {"source", tag(e.expectation.source)},
                       {"hypotheses", hyps},
                       {"certification", linalg::to_string(e.certification)}});
  }

  ordered_json identities = ordered_json::array();
  for (const auto& i : report.identities) {
    identities.push_back({{"p", i.p},
                          {"source", tag(Source::StrandDifference)},
                          {"lhs", i.lhs},
                          {"rhs", i.rhs},
                          {"status", to_string(i.status)}});
  }

  ordered_json derived = ordered_json::array();
  for (const auto& d : report.derived) {
    derived.push_back({{"p", d.p},
                       {"source", tag(Source::WedgeSections)},
                       {"h0_wedge", d.h0_wedge},
                       {"dual_wedge_index", report.bundle.r - d.p},
                       {"trivial_bound", d.trivial_bound}});
  }

  ordered_json out;
  out["curve"] = curve;
  out["d"] = report.bundle.d;
  out["r"] = report.bundle.r;
  out["entries"] = entries;
  out["identities"] = identities;
  out["derived"] = derived;
  out["primes"] = report.primes;
  out["seed"] = report.seed;
  out["summary"] = {{"PASS", report.count(Status::Pass)},
                    {"FAIL", report.count(Status::Fail)},
                    {"SKIPPED-hypothesis", report.count(Status::SkippedHypothesis)},
                    {"INCONCLUSIVE-modular",
                     report.count(Status::InconclusiveModular)}};
  return out.dump(indent) + "\n";
}

}  // namespace syzygy::theorems
