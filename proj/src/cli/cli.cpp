#include "syzygy/cli.hpp"

#include "syzygy/corpus.hpp"
#include "syzygy/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace syzygy::cli {

using koszul::BettiTable;
using koszul::IndexRange;
using koszul::KoszulContext;

koszul::IndexRange parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad range '" + text + "'");
    return v;
  };
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int v = parse_int(text);
      return {v, v};
    }
    IndexRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (r.first > r.last) throw std::invalid_argument("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "', expected a..b");
  }
}

namespace {

nlohmann::ordered_json curve_json(const curves::CurveModel& c) {
  const auto desc = curves::curve_descriptors(c);
  nlohmann::ordered_json j;
  j["model"] = c.is_rational() ? "rational" : "superelliptic";
  j["a"] = desc.a;
  j["b"] = desc.b;
  j["f"] = std::vector<std::int64_t>(c.f().begin(), c.f().end());
  j["equation"] = curves::describe(c);
  j["genus"] = desc.genus;
  j["gaps"] = desc.gaps;
  j["canonical_degree"] = desc.canonical_degree;
  j["gonality"] = desc.gonality;
  j["hyperelliptic"] = desc.hyperelliptic;
  j["trigonal"] = desc.trigonal;
  j["k_plus_g13_degree"] = desc.k_plus_g13_degree
                               ? nlohmann::ordered_json(*desc.k_plus_g13_degree)
                               : nlohmann::ordered_json();
  j["gonality_assumption"] = desc.gonality_assumption;
  return j;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(v[k]);
  }
  return s;
}

std::string render_curve_info(const curves::CurveModel& c, Format format) {
  if (format == Format::Json) return curve_json(c).dump(2) + "\n";
  const auto desc = curves::curve_descriptors(c);
  std::ostringstream out;
  out << "curve:            " << curves::describe(c) << "\n"
      << "genus:            " << desc.genus << "\n"
      << "semigroup gaps:   {" << join(desc.gaps) << "}\n"
      << "canonical degree: " << desc.canonical_degree << "  (K = "
      << desc.canonical_degree << "P)\n"
      << "gonality:         " << desc.gonality << "  (" << desc.gonality_assumption
      << ")\n"
      << "hyperelliptic:    " << (desc.hyperelliptic ? "yes" : "no") << "\n"
      << "trigonal:         " << (desc.trigonal ? "yes" : "no") << "\n";
  if (desc.k_plus_g13_degree) {
    out << "K + g^1_3 degree: " << *desc.k_plus_g13_degree << "\n";
  }
  if (!c.is_rational()) out << "discriminant:     " << c.discriminant() << "\n";
  return out.str();
}

std::string read_curve_spec(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return spec;
  std::ifstream in(spec);
  if (!in) throw ModelInvalidError("cannot read curve spec file '" + spec + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

koszul::RankPolicy policy_of(const RunConfig& cfg) {
  koszul::RankPolicy policy;
  policy.mode = cfg.rank;
  policy.prime_count = cfg.prime_count;
  policy.seed = cfg.seed;
  policy.exact_cap = cfg.exact_cap;
  policy.jobs = cfg.jobs;
  return policy;
}

void validate(const RunConfig& cfg) {
  if (cfg.prime_count < 1) throw std::invalid_argument("--primes must be >= 1");
  if (cfg.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
  if (cfg.q.first < 0 || cfg.q.last > 3) {
    throw std::invalid_argument("--q must lie within 0..3");
  }
  if (cfg.p && cfg.p->first < 0) throw std::invalid_argument("--p must be >= 0");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  out << text;
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + *cfg.out + "'");
    file << text;
  }
}

theorems::VerificationReport verify_one(const curves::CurveModel& curve, int d,
                                        std::optional<IndexRange> p, IndexRange q,
                                        const RunConfig& cfg) {
  KoszulContext ctx(curve, d);
  const IndexRange window = p.value_or(IndexRange{0, ctx.bundle().r});
  koszul::DifferentialRanks ranks(ctx, policy_of(cfg));
  const BettiTable table = koszul::betti_table(ctx, window, q, ranks);

  koszul::RankPolicy exact_policy = policy_of(cfg);
  exact_policy.mode = koszul::RankMode::ExactBelowCap;
  koszul::DifferentialRanks exact_ranks(ctx, exact_policy);
  theorems::Escalator escalate =
      [&](int pp, int qq) -> std::optional<koszul::BettiEntry> {
    auto e = koszul::koszul_dim(ctx, pp, qq, exact_ranks);
    if (e.certification != linalg::Certification::ExactRational) return std::nullopt;
    return e;
  };
  return theorems::verify_table(table, curve, ctx.bundle(), escalate);
}

int cmd_curve_info(const RunConfig& cfg, std::ostream& out) {
  const auto curve = curves::parse_curve_spec(read_curve_spec(cfg.curve_spec));
  emit(cfg, render_curve_info(curve, cfg.format), out);
  return kExitOk;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
  const auto curve = curves::parse_curve_spec(read_curve_spec(cfg.curve_spec));
  if (!cfg.d) throw std::invalid_argument("--d is required");
  KoszulContext ctx(curve, *cfg.d);
  const IndexRange window = cfg.p.value_or(IndexRange{0, ctx.bundle().r});
  const BettiTable table = koszul::betti_table(ctx, window, cfg.q, policy_of(cfg));
  switch (cfg.format) {
    case Format::Text: emit(cfg, render_text(table, ctx), out); break;
    case Format::Json: emit(cfg, render_json(table, ctx), out); break;
    case Format::Csv: emit(cfg, render_csv(table), out); break;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::Csv) {
    throw std::invalid_argument("verify supports --format text or json");
  }
  std::vector<theorems::VerificationReport> reports;
  if (cfg.corpus || cfg.extended) {
    for (const auto& c : corpus::standard_cases(cfg.extended)) {
      reports.push_back(verify_one(c.curve, c.d, c.p, c.q, cfg));
    }
  } else {
    const auto curve = curves::parse_curve_spec(read_curve_spec(cfg.curve_spec));
    if (!cfg.d) throw std::invalid_argument("--d is required");
    reports.push_back(verify_one(curve, *cfg.d, cfg.p, cfg.q, cfg));
  }

  std::string text;
  if (cfg.format == Format::Json) {
    if (reports.size() == 1) {
      text = theorems::to_json(reports.front());
    } else {
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        all.push_back(nlohmann::ordered_json::parse(theorems::to_json(r)));
      }
      text = all.dump(2) + "\n";
    }
  } else {
    for (const auto& r : reports) text += render_text(r);
  }
  emit(cfg, text, out);
  const bool failed = std::any_of(reports.begin(), reports.end(),
                                  [](const auto& r) { return r.any_failure(); });
  return failed ? kExitFailure : kExitOk;
}

}  // namespace

std::string render_text(const BettiTable& table, const KoszulContext& ctx) {
  std::ostringstream out;
  const auto& c = ctx.curve();
  out << curves::describe(c) << "  g=" << c.genus() << "  d=" << ctx.bundle().d
      << "  r=" << ctx.bundle().r << "\n";
  const IndexRange pr = table.p_range();
  const IndexRange qr = table.q_range();
  std::size_t width = 3;
  for (const auto& e : table.entries()) {
    width = std::max(width, std::to_string(e.dim).size() + 1);
  }
  out << "     ";
  for (int p = pr.first; p <= pr.last; ++p) {
    out << std::setw(static_cast<int>(width)) << p;
  }
  out << "\n";
  for (int q = qr.first; q <= qr.last; ++q) {
    out << "q=" << std::left << std::setw(3) << q << std::right;
    for (int p = pr.first; p <= pr.last; ++p) {
      out << std::setw(static_cast<int>(width)) << table.find(p, q)->dim;
    }
    out << "\n";
  }
  out << "seed " << table.seed() << ", primes";
  if (table.primes().empty()) out << " none (exact)";
  for (auto p : table.primes()) out << " " << p;
  out << "\n";
  return out.str();
}

std::string render_csv(const BettiTable& table) {
  std::string out = "p,q,dim,rank_out,rank_in,middle_dim\n";
  for (const auto& e : table.entries()) {
    out += std::to_string(e.p) + "," + std::to_string(e.q) + "," +
           std::to_string(e.dim) + "," + std::to_string(e.rank_out) + "," +
           std::to_string(e.rank_in) + "," + std::to_string(e.middle_dim) + "\n";
  }
  return out;
}

std::string render_json(const BettiTable& table, const KoszulContext& ctx) {
  nlohmann::ordered_json j;
  j["curve"] = curve_json(ctx.curve());
  j["d"] = ctx.bundle().d;
  j["r"] = ctx.bundle().r;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : table.entries()) {
    entries.push_back({{"p", e.p},
                       {"q", e.q},
                       {"dim", e.dim},
                       {"rank_out", e.rank_out},
                       {"rank_in", e.rank_in},
                       {"middle_dim", e.middle_dim},
                       {"certification", linalg::to_string(e.certification)}});
  }
  j["entries"] = entries;
  j["primes"] = std::vector<std::uint64_t>(table.primes().begin(),
                                           table.primes().end());
  j["seed"] = table.seed();
  return j.dump(2) + "\n";
}

std::string render_text(const theorems::VerificationReport& report) {
  std::ostringstream out;
  const auto& desc = report.descriptor;
  out << "== " << curves::describe(report.curve) << "  g=" << desc.genus
      << "  gonality=" << desc.gonality << "  d=" << report.bundle.d
      << "  r=" << report.bundle.r << "\n";
  for (const auto& e : report.entries) {
    out << "  K(" << e.expectation.p << "," << e.expectation.q << ")  "
        << std::left << std::setw(16) << e.expectation.describe() << " computed "
        << std::setw(5) << e.computed << std::setw(21) << to_string(e.status)
        << tag(e.expectation.source) << std::right << "\n";
  }
  for (const auto& i : report.identities) {
    out << "  K(" << i.p << ",2) - K(" << i.p + 1 << ",1) = " << i.lhs
        << ", predicted " << i.rhs << "  " << to_string(i.status) << "\n";
  }
  for (const auto& d : report.derived) {
    out << "  h0(wedge^" << report.bundle.r - d.p << " E) = " << d.h0_wedge
        << "  (C(r+1," << d.p + 1 << ") = " << d.trivial_bound << ")\n";
  }
  out << "  summary: PASS " << report.count(theorems::Status::Pass) << ", FAIL "
      << report.count(theorems::Status::Fail) << ", SKIPPED "
      << report.count(theorems::Status::SkippedHypothesis) << ", INCONCLUSIVE "
      << report.count(theorems::Status::InconclusiveModular) << "\n";
  return out.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koszul cohomology of curves embedded by complete linear series",
               "syzygy"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string p_text, q_text, format_text = "text", rank_text = "consensus";

  auto add_common = [&](CLI::App* sub, bool needs_degree) {
    sub->add_option("--curve", cfg.curve_spec, "curve spec: JSON file or inline JSON");
    if (!needs_degree) return;
    sub->add_option("--d", cfg.d, "degree of L = dP, at least 2g+1");
    sub->add_option("--p", p_text, "p window a..b (default 0..r)");
    sub->add_option("--q", q_text, "q window a..b within 0..3 (default 0..3)");
    sub->add_option("--primes", cfg.prime_count, "number of sampled primes");
    sub->add_option("--seed", cfg.seed, "prime sampling seed");
    sub->add_option("--rank", rank_text, "consensus | exact (exact below the cap)");
    sub->add_option("--exact-cap", cfg.exact_cap, "largest dimension ranked exactly");
    sub->add_option("--out", cfg.out, "also write the output to this path");
    sub->add_option("--jobs", cfg.jobs, "parallel rank tasks");
  };
  auto* info = app.add_subcommand("curve-info", "genus, gaps, gonality of a curve");
  add_common(info, false);
  info->add_option("--format", format_text, "text | json");
  info->add_option("--out", cfg.out, "also write the output to this path");
  auto* betti = app.add_subcommand("betti", "compute a Betti table");
  add_common(betti, true);
  betti->add_option("--format", format_text, "text | json | csv");
  auto* verify = app.add_subcommand("verify", "check every prediction on a table");
  add_common(verify, true);
  verify->add_option("--format", format_text, "text | json");
  verify->add_flag("--corpus", cfg.corpus, "run the standard corpus");
  verify->add_flag("--extended", cfg.extended,
                   "standard corpus plus the long-running genus-9 case");

  std::vector<std::string> storage{"syzygy"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (!p_text.empty()) cfg.p = parse_range(p_text);
    if (!q_text.empty()) cfg.q = parse_range(q_text);
    if (format_text == "text") cfg.format = Format::Text;
    else if (format_text == "json") cfg.format = Format::Json;
    else if (format_text == "csv") cfg.format = Format::Csv;
    else throw std::invalid_argument("unknown --format '" + format_text + "'");
    if (rank_text == "consensus") cfg.rank = koszul::RankMode::Consensus;
    else if (rank_text == "exact") cfg.rank = koszul::RankMode::ExactBelowCap;
    else throw std::invalid_argument("unknown --rank '" + rank_text + "'");
    validate(cfg);

    const bool corpus_run = verify->parsed() && (cfg.corpus || cfg.extended);
    if (cfg.curve_spec.empty() && !corpus_run) {
      throw std::invalid_argument("--curve is required");
    }
    if (info->parsed()) return cmd_curve_info(cfg, out);
    if (betti->parsed()) return cmd_betti(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const syzygy::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace syzygy::cli
