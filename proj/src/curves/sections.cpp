#include "syzygy/curves.hpp"
#include "syzygy/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

namespace syzygy::curves {

SectionBasis::SectionBasis(const CurveModel& c, int level) : level_(level) {
  if (level < 0) throw DomainError("pole bound must be >= 0");
  for (int j = 0; j < c.a(); ++j) {
    for (int i = 0; c.pole_order({i, j}) <= level; ++i) {
      monomials_.push_back({i, j});
    }
  }
  std::sort(monomials_.begin(), monomials_.end(),
            [&](const Monomial& x, const Monomial& y) {
              return c.pole_order(x) < c.pole_order(y);
            });
}

bool SectionBasis::contains(Monomial m) const {
  return std::find(monomials_.begin(), monomials_.end(), m) != monomials_.end();
}

SectionBasis section_basis(const CurveModel& c, int m) {
  return SectionBasis(c, m);
}

namespace {

void require_in_basis(const CurveModel& c, Monomial m, int level) {
  if (m.i < 0 || m.j < 0 || m.j >= c.a() || c.pole_order(m) > level) {
    throw DomainError("monomial x^" + std::to_string(m.i) + " y^" +
                      std::to_string(m.j) + " is not in the basis of H^0(" +
                      std::to_string(level) + "P)");
  }
}

}  // namespace

Coordinates multiply_monomial(const CurveModel& c, Monomial s, int m1,
                              Monomial t, int m2) {
  require_in_basis(c, s, m1);
  require_in_basis(c, t, m2);
  const int i = s.i + t.i;
  const int j = s.j + t.j;
  if (j < c.a()) return {{c.semigroup_rank(c.pole_order({i, j})), 1}};

  // y^a = f(x); j <= 2a - 2 so one rewrite suffices
  Coordinates out;
  const auto f = c.f();
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    const Monomial term{i + static_cast<int>(k), j - c.a()};
    out.emplace_back(c.semigroup_rank(c.pole_order(term)), f[k]);
  }
  // pole orders a*(i+k) + b*(j-a) increase with k
  return out;
}

std::vector<int> semigroup_gaps(const CurveModel& c) {
  std::vector<int> gaps;
  if (c.is_rational()) return gaps;
  // the largest gap of <a, b> is ab - a - b = 2g - 1
  for (int v = 1; v <= 2 * c.genus() - 1; ++v) {
    if (!c.in_semigroup(v)) gaps.push_back(v);
  }
  return gaps;
}

RiemannRochCheck riemann_roch_selfcheck(const CurveModel& c, int m_max) {
  RiemannRochCheck check;
  const int g = c.genus();
  check.gap_count = static_cast<int>(semigroup_gaps(c).size());
  for (int m = std::max(0, 2 * g - 1); m <= m_max; ++m) {
    if (static_cast<int>(section_basis(c, m).size()) != m + 1 - g) {
      check.ok = false;
      check.first_failure = m;
      break;
    }
  }
  if (check.gap_count != g) check.ok = false;
  return check;
}

CurveDescriptor curve_descriptors(const CurveModel& c) {
  CurveDescriptor d;
  d.a = c.a();
  d.b = c.b();
  d.genus = c.genus();
  d.canonical_degree = 2 * c.genus() - 2;
  d.gaps = semigroup_gaps(c);
  if (c.is_rational()) {
    d.gonality = 1;
    d.gonality_assumption = "rational curve";
    return d;
  }
  d.gonality = std::min(c.a(), c.b());
  d.hyperelliptic = d.gonality == 2;
  d.trigonal = d.gonality == 3;
  if (d.trigonal) d.k_plus_g13_degree = 2 * c.genus() + 1;
  d.gonality_assumption =
      "gonality taken as min(a, deg f) = " + std::to_string(d.gonality) +
      " (degree of x resp. y as a map to P^1); smaller pencils are excluded by "
      "Castelnuovo-Severi for the models used, not re-proved here";
  return d;
}

CurveModel parse_curve_spec(std::string_view json_text) {
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ModelInvalidError(std::string("curve spec is not valid JSON: ") +
                            e.what());
  }
  try {
    const std::string model = spec.at("model").get<std::string>();
    if (model == "rational") return CurveModel::rational();
    if (model != "superelliptic") {
      throw ModelInvalidError("unknown curve model '" + model + "'");
    }
    const int a = spec.at("a").get<int>();
    if (spec.contains("f")) {
      return build_curve(a, spec.at("f").get<std::vector<std::int64_t>>());
    }
    return random_superelliptic(a, spec.at("b").get<int>(),
                                spec.at("seed").get<std::uint64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ModelInvalidError(std::string("malformed curve spec: ") + e.what());
  }
}

CurveModel random_superelliptic(int a, int b, std::uint64_t seed) {
  if (a < 2) throw ModelInvalidError("random models need a >= 2");
  if (b < 3) throw ModelInvalidError("deg f must be >= 3 when a >= 2");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(b) + 1);
    for (auto& coeff : f) coeff = static_cast<std::int64_t>(rng() % 9) - 4;
    f.back() = static_cast<std::int64_t>(rng() % 3) + 1;
    try {
      return build_curve(a, std::move(f));
    } catch (const ModelInvalidError& e) {
      if (std::string_view(e.what()) != "f not squarefree") throw;
    }
  }
  throw ModelInvalidError("no squarefree f found for the given seed");
}

}  // namespace syzygy::curves
