#include "mgfix/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mgfix/sampling.hpp"

namespace mgfix {

bool AxiomReport::passed() const noexcept {
  return std::all_of(axioms.begin(), axioms.end(),
                     [](const AxiomStatus& a) { return a.passed(); });
}

const AxiomStatus* AxiomReport::find(std::string_view id) const noexcept {
  for (const auto& a : axioms) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

namespace {

using Quad = std::array<Point, 4>;

struct Outcome {
  bool applicable = true;
  bool holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
};

Outcome leq(double lhs, double rhs) { return {true, lhs <= rhs + kLogSlack, lhs, rhs}; }
Outcome approx_eq(double lhs, double rhs) {
  return {true, std::abs(lhs - rhs) <= kLogSlack, lhs, rhs};
}
Outcome skip() { return {false, true, 0.0, 0.0}; }

template <typename Metric>
struct AxiomDef {
  std::string_view id;
  std::string_view statement;
  std::size_t arity;
  Outcome (*eval)(const Metric&, const Quad&);
};

// ---- multiplicative metric -------------------------------------------------

const std::array<AxiomDef<MultMetric>, 4> kMultAxioms{{
    {"M1", "d(x,y) >= 1", 2,
     [](const MultMetric& d, const Quad& p) {
       const double v = d(p[0], p[1]).log;
       return Outcome{true, v >= -kLogSlack, v, 0.0};
     }},
    {"M2", "d(x,y) = 1 iff x = y", 2,
     [](const MultMetric& d, const Quad& p) {
       const double v = d(p[0], p[1]).log;
       if (p[0] == p[1]) return approx_eq(v, 0.0);
       return Outcome{true, v != 0.0, v, 0.0};
     }},
    {"M3", "d(x,y) = d(y,x)", 2,
     [](const MultMetric& d, const Quad& p) {
       return approx_eq(d(p[0], p[1]).log, d(p[1], p[0]).log);
     }},
    {"M4", "d(x,y) <= d(x,z) * d(z,y)", 3,
     [](const MultMetric& d, const Quad& p) {
       return leq(d(p[0], p[1]).log, d(p[0], p[2]).log + d(p[2], p[1]).log);
     }},
}};

// ---- G-metric ----------------------------------------------------------------

Outcome permutation_spread(const GMetric& g, const Quad& p) {
  const std::array<double, 6> v{
      g(p[0], p[1], p[2]).log, g(p[0], p[2], p[1]).log, g(p[1], p[0], p[2]).log,
      g(p[1], p[2], p[0]).log, g(p[2], p[0], p[1]).log, g(p[2], p[1], p[0]).log,
  };
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {true, *hi - *lo <= kLogSlack, *hi, *lo};
}

const std::array<AxiomDef<GMetric>, 5> kGAxioms{{
    {"G1", "G(x,x,x) = 1", 1,
     [](const GMetric& g, const Quad& p) { return approx_eq(g(p[0], p[0], p[0]).log, 0.0); }},
    {"G2", "G(x,x,y) > 1 for x != y", 2,
     [](const GMetric& g, const Quad& p) {
       if (p[0] == p[1]) return skip();
       const double v = g(p[0], p[0], p[1]).log;
       return Outcome{true, v > 0.0, v, 0.0};
     }},
    {"G3", "G(x,x,y) <= G(x,y,z) for y != z", 3,
     [](const GMetric& g, const Quad& p) {
       if (p[1] == p[2]) return skip();
       return leq(g(p[0], p[0], p[1]).log, g(p[0], p[1], p[2]).log);
     }},
    {"G4", "G(x,y,z) invariant under all argument permutations", 3, permutation_spread},
    {"G5", "G(x,y,z) <= G(x,t,t) * G(t,y,z)", 4,
     [](const GMetric& g, const Quad& p) {
       return leq(g(p[0], p[1], p[2]).log, g(p[0], p[3], p[3]).log + g(p[3], p[1], p[2]).log);
     }},
}};

const std::array<AxiomDef<GMetric>, 4> kGConsequences{{
    {"P1", "G(x,x,x) = 1", 1,
     [](const GMetric& g, const Quad& p) { return approx_eq(g(p[0], p[0], p[0]).log, 0.0); }},
    {"P2", "G(x,y,z) <= G(x,t,t) * G(y,t,t) * G(z,t,t)", 4,
     [](const GMetric& g, const Quad& p) {
       return leq(g(p[0], p[1], p[2]).log,
                  g(p[0], p[3], p[3]).log + g(p[1], p[3], p[3]).log + g(p[2], p[3], p[3]).log);
     }},
    {"P3", "G(x,y,z) <= G(x,x,y) * G(x,x,z)", 3,
     [](const GMetric& g, const Quad& p) {
       return leq(g(p[0], p[1], p[2]).log, g(p[0], p[0], p[1]).log + g(p[0], p[0], p[2]).log);
     }},
    {"P4", "G(x,y,y) <= G(y,x,x)^2", 2,
     [](const GMetric& g, const Quad& p) {
       return leq(g(p[0], p[1], p[1]).log, 2.0 * g(p[1], p[0], p[0]).log);
     }},
}};

std::vector<Quad> build_tuples(const Interval& domain, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("axiom check: sample count must be >= 1");
  if (domain.empty() || !domain.bounded() || domain.lo < 0.0) {
    throw std::invalid_argument("axiom check: domain must be a nonempty bounded subset of [0, inf)");
  }
  Sampler sampler(seed);
  std::vector<Quad> tuples;
  tuples.reserve(n + 81 + 6);

  const std::array<Point, 3> corners{Point(domain.first()),
                                     Point(clamp_into(0.5 * (domain.lo + domain.hi), domain)),
                                     Point(domain.last())};
  for (Point a : corners)
    for (Point b : corners)
      for (Point c : corners)
        for (Point t : corners) tuples.push_back({a, b, c, t});

  std::array<Point, 3> tri{Point(sampler.uniform(domain)), Point(sampler.uniform(domain)),
                           Point(sampler.uniform(domain))};
  const Point t(sampler.uniform(domain));
  std::sort(tri.begin(), tri.end());
  do {
    tuples.push_back({tri[0], tri[1], tri[2], t});
  } while (std::next_permutation(tri.begin(), tri.end()));

  for (std::size_t i = 0; i < n; ++i) {
    tuples.push_back({Point(sampler.uniform(domain)), Point(sampler.uniform(domain)),
                      Point(sampler.uniform(domain)), Point(sampler.uniform(domain))});
  }
  return tuples;
}

template <typename Metric, std::size_t N>
AxiomReport run_suite(std::string suite, const Metric& metric,
                      const std::array<AxiomDef<Metric>, N>& defs, const Interval& domain,
                      std::size_t n, std::uint64_t seed) {
  AxiomReport report;
  report.suite = std::move(suite);
  report.subject = metric.description();
  report.domain = domain;
  report.samples = n;
  report.seed = seed;
  for (const auto& def : defs) {
    report.axioms.push_back({std::string(def.id), std::string(def.statement), 0, 0, {}});
  }

  for (const Quad& q : build_tuples(domain, n, seed)) {
    for (std::size_t k = 0; k < N; ++k) {
      const Outcome o = defs[k].eval(metric, q);
      if (!o.applicable) continue;
      AxiomStatus& status = report.axioms[k];
      ++status.checks;
      if (o.holds) continue;
      ++status.violations;
      if (status.witnesses.size() < kMaxWitnesses) {
        status.witnesses.push_back(
            {std::vector<Point>(q.begin(), q.begin() + defs[k].arity), o.lhs, o.rhs});
      }
    }
  }
  return report;
}

template <typename Metric, std::size_t N>
bool recheck(const Metric& metric, const std::array<AxiomDef<Metric>, N>& defs,
             std::string_view id, const Witness& w) {
  for (const auto& def : defs) {
    if (def.id != id) continue;
    if (w.points.size() != def.arity) return false;
    Quad q{};
    std::copy(w.points.begin(), w.points.end(), q.begin());
    const Outcome o = def.eval(metric, q);
    return o.applicable && !o.holds;
  }
  return false;
}

}  // namespace

AxiomReport check_mult_axioms(const MultMetric& d, const Interval& domain, std::size_t n,
                              std::uint64_t seed) {
  return run_suite("multiplicative-metric", d, kMultAxioms, domain, n, seed);
}

AxiomReport check_gm_axioms(const GMetric& g, const Interval& domain, std::size_t n,
                            std::uint64_t seed) {
  return run_suite("g-metric", g, kGAxioms, domain, n, seed);
}

AxiomReport check_gm_consequences(const GMetric& g, const Interval& domain, std::size_t n,
                                  std::uint64_t seed) {
  return run_suite("g-metric-consequences", g, kGConsequences, domain, n, seed);
}

bool witness_violates(const MultMetric& d, std::string_view axiom_id, const Witness& w) {
  return recheck(d, kMultAxioms, axiom_id, w);
}

bool witness_violates(const GMetric& g, std::string_view axiom_id, const Witness& w) {
  return recheck(g, kGAxioms, axiom_id, w) || recheck(g, kGConsequences, axiom_id, w);
}

}  // namespace mgfix
