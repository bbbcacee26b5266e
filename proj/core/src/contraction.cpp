#include "mgfix/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mgfix/sampling.hpp"

namespace mgfix {

void ContractionParams::validate() const {
  if (!(eta >= 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in [0, 1)");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("gamma must be finite and > 0");
  }
}

SelfMap::SelfMap(std::string description, Interval domain, Fn fn)
    : description_(std::move(description)), domain_(domain), fn_(std::move(fn)) {}

std::optional<Point> SelfMap::try_apply(Point x) const {
  if (!accepts(x)) return std::nullopt;
  const double v = fn_(x.value());
  if (!Point::is_carrier(v)) return std::nullopt;
  return Point(v);
}

Point SelfMap::operator()(Point x) const {
  if (auto y = try_apply(x)) return *y;
  std::ostringstream os;
  os.precision(17);
  os << description_ << ": no carrier image for " << x.value();
  throw Error(ErrorCode::domain_exit, os.str());
}

std::string_view to_string(Condition c) {
  return c == Condition::root ? "root" : "implicit";
}

std::optional<Condition> parse_condition(std::string_view text) {
  if (text == "root") return Condition::root;
  if (text == "implicit") return Condition::implicit;
  return std::nullopt;
}

namespace {

struct Sides {
  double lhs;
  double rhs;
};

Sides root_sides(const GMetric& g, const SelfMap& f, double eta, Point x, Point y, Point z) {
  return {g(f(x), f(y), f(z)).log, eta * g(x, y, z).log};
}

Sides implicit_sides(const GMetric& g, const SelfMap& f, double eta, Point x, Point y, Point z) {
  return {g(f(x), f(y), f(z)).log, eta * implicit_terms(g, f, x, y, z).max()};
}

bool within(const Sides& s) { return s.lhs <= s.rhs + kLogSlack; }

}  // namespace

bool root_contraction_holds(const GMetric& g, const SelfMap& f, double eta, unsigned /*m*/,
                            Point x, Point y, Point z) {
  return within(root_sides(g, f, eta, x, y, z));
}

bool seed_condition_holds(const GMetric& g, const SelfMap& f, const ContractionParams& params) {
  const double scaled = (1.0 - params.eta) * params.gamma;
  if (scaled < 1.0) return false;
  const Point x0 = params.seed_point;
  const Point fx0 = f(x0);
  return g(x0, fx0, fx0).log <= std::log(scaled);
}

ImplicitTerms implicit_terms(const GMetric& g, const SelfMap& f, Point x, Point y, Point z) {
  const Point fx = f(x);
  const Point fy = f(y);
  const double min_a = g(z, fx, fx).log;
  const double min_b = g(x, z, z).log;

  ImplicitTerms t;
  t.min_took_first = min_a <= min_b;
  t.terms = {g(x, y, z).log, g(x, fx, fx).log, g(y, fy, fy).log, g(x, fy, fy).log,
             t.min_took_first ? min_a : min_b};
  // max_element returns the first maximal element.
  t.argmax = static_cast<std::size_t>(
      std::max_element(t.terms.begin(), t.terms.end()) - t.terms.begin());
  return t;
}

LogDistance implicit_bound_M(const GMetric& g, const SelfMap& f, double eta, unsigned m, Point x,
                             Point y, Point z) {
  return {eta * implicit_terms(g, f, x, y, z).max() / static_cast<double>(m)};
}

bool implicit_contraction_holds(const GMetric& g, const SelfMap& f, double eta, unsigned /*m*/,
                                Point x, Point y, Point z) {
  return within(implicit_sides(g, f, eta, x, y, z));
}

bool witness_violates(const GMetric& g, const SelfMap& f, double eta, Condition condition,
                      const ContractionWitness& w) {
  const Sides s = condition == Condition::root ? root_sides(g, f, eta, w.x, w.y, w.z)
                                               : implicit_sides(g, f, eta, w.x, w.y, w.z);
  return !within(s);
}

namespace {

std::string describe(const Region& region, const ContractionParams& params) {
  if (!region.is_ball()) return region.bounds().to_string();
  std::ostringstream os;
  os.precision(17);
  os << "ball(center=" << params.seed_point.value() << ", radius=" << params.gamma << ")";
  return os.str();
}

}  // namespace

CertificateReport certify_region(const GMetric& g, const SelfMap& f,
                                 const ContractionParams& params, Condition condition,
                                 const Region& region, std::size_t n, std::uint64_t seed) {
  params.validate();
  if (n == 0) throw std::invalid_argument("certify_region: sample count must be >= 1");

  CertificateReport report;
  report.condition = condition;
  report.region = describe(region, params);
  report.eta = params.eta;
  report.m = params.m;
  report.samples = n;
  report.seed = seed;

  std::optional<ClosedBall> ball;
  Interval bounds;
  if (region.is_ball()) {
    ball.emplace(params.seed_point, params.gamma);
    if (!ball->nonempty()) {
      throw Error(ErrorCode::empty_region, "ball radius < 1: the ball is empty");
    }
    bounds = intersect(ball_extent(g, *ball, f.domain()), f.domain());
  } else {
    bounds = intersect(region.bounds(), f.domain());
  }
  if (bounds.empty()) {
    throw Error(ErrorCode::empty_region, "region " + report.region + " has no point in the map domain");
  }
  if (!bounds.bounded()) {
    throw std::invalid_argument("certify_region: region must be bounded");
  }
  report.sampled = bounds;

  const Point x0 = params.seed_point;
  const Point fx0 = f(x0);
  report.seed_log = g(x0, fx0, fx0).log;
  report.seed_bound_log = std::log((1.0 - params.eta) * params.gamma);
  report.seed_condition = seed_condition_holds(g, f, params);

  Sampler sampler(seed);
  std::vector<std::array<double, 3>> triples;
  triples.reserve(n + 16);

  const double a = bounds.first();
  const double b = bounds.last();
  for (double p : {a, b})
    for (double q : {a, b})
      for (double r : {a, b}) triples.push_back({p, q, r});
  if (bounds.contains(x0.value())) {
    const double s = x0.value();
    triples.push_back({s, s, s});
    triples.push_back({s, s, b});
    triples.push_back({a, s, s});
  }
  const double u = sampler.uniform(bounds);
  const double v = sampler.uniform(bounds);
  triples.push_back({u, u, v});
  triples.push_back({u, v, v});
  triples.push_back({u, u, u});

  const auto xs = sampler.stratified(bounds, n);
  const auto ys = sampler.stratified(bounds, n);
  const auto zs = sampler.stratified(bounds, n);
  for (std::size_t i = 0; i < n; ++i) triples.push_back({xs[i], ys[i], zs[i]});

  for (const auto& t : triples) {
    const Point x(t[0]), y(t[1]), z(t[2]);
    if (ball && !(ball_contains(g, *ball, x) && ball_contains(g, *ball, y) &&
                  ball_contains(g, *ball, z))) {
      continue;
    }
    const Sides s = condition == Condition::root ? root_sides(g, f, params.eta, x, y, z)
                                                 : implicit_sides(g, f, params.eta, x, y, z);
    ++report.triples_checked;
    if (within(s)) continue;
    ++report.violations;
    if (report.witnesses.size() < kMaxContractionWitnesses) {
      report.witnesses.push_back({x, y, z, s.lhs, s.rhs});
    }
  }
  if (report.triples_checked == 0) {
    throw Error(ErrorCode::empty_region, "no sampled triple lies in " + report.region);
  }
  return report;
}

}  // namespace mgfix
