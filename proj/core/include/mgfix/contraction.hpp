#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgfix/metric.hpp"
#include "mgfix/types.hpp"

namespace mgfix {

/// Contraction certificate inputs: constant eta, root index m, ball radius
/// gamma (multiplicative scale) and the seed x0 that centers the ball.
struct ContractionParams {
  double eta = 0.0;
  unsigned m = 1;
  double gamma = 1.0;
  Point seed_point{};

  /// Throws std::invalid_argument unless 0 <= eta < 1, m >= 1, gamma > 0.
  void validate() const;
};

/// Self-map of the carrier with a declared domain.
class SelfMap {
 public:
  using Fn = std::function<double(double)>;

  SelfMap(std::string description, Interval domain, Fn fn);

  const std::string& description() const noexcept { return description_; }
  const Interval& domain() const noexcept { return domain_; }

  bool accepts(Point x) const { return domain_.contains(x.value()); }

  /// F(x), or nullopt if x lies outside the domain or the image is not a
  /// carrier point.
  std::optional<Point> try_apply(Point x) const;

  /// F(x); throws Error(domain_exit) where try_apply yields nullopt.
  Point operator()(Point x) const;

 private:
  std::string description_;
  Interval domain_;
  Fn fn_;
};

enum class Condition { root, implicit };

std::string_view to_string(Condition c);
std::optional<Condition> parse_condition(std::string_view text);

// All predicates below compare ln G(Fx,Fy,Fz) against eta times the relevant
// log term, with kLogSlack. Taking the m-th root scales both sides by 1/m,
// which cannot change the outcome, so the comparison is made before scaling
// and the result is identical for every m.

/// G(Fx,Fy,Fz)^(1/m) <= (G(x,y,z)^(1/m))^eta.
bool root_contraction_holds(const GMetric& g, const SelfMap& f, double eta, unsigned m, Point x,
                            Point y, Point z);

/// G(x0, Fx0, Fx0) <= (1 - eta) * gamma. False, not an error, when
/// (1 - eta) * gamma < 1.
bool seed_condition_holds(const GMetric& g, const SelfMap& f, const ContractionParams& params);

/// The five candidates of the implicit max-bound, unscaled log values, in the
/// order: G(x,y,z), G(x,Fx,Fx), G(y,Fy,Fy), G(x,Fy,Fy),
/// min{G(z,Fx,Fx), G(x,z,z)}.
struct ImplicitTerms {
  std::array<double, 5> terms{};
  std::size_t argmax = 0;     // first index attaining the max
  bool min_took_first = true;  // which side of the min won (ties pick the first)

  double max() const noexcept { return terms[argmax]; }
};

ImplicitTerms implicit_terms(const GMetric& g, const SelfMap& f, Point x, Point y, Point z);

/// eta * (1/m) * max{...} in log-domain.
LogDistance implicit_bound_M(const GMetric& g, const SelfMap& f, double eta, unsigned m, Point x,
                             Point y, Point z);

/// G(Fx,Fy,Fz)^(1/m) <= implicit bound.
bool implicit_contraction_holds(const GMetric& g, const SelfMap& f, double eta, unsigned m,
                                Point x, Point y, Point z);

/// Where certify_region draws its triples from: the closed ball centered at
/// the seed point, or an explicit interval.
class Region {
 public:
  static Region ball() { return Region(true, {}); }
  static Region interval(Interval i) { return Region(false, i); }

  bool is_ball() const noexcept { return ball_; }
  const Interval& bounds() const noexcept { return interval_; }

 private:
  Region(bool ball, Interval i) : ball_(ball), interval_(i) {}
  bool ball_;
  Interval interval_;
};

/// A triple where the condition failed. lhs/rhs are unscaled log values
/// (ln G, i.e. the m = 1 form).
struct ContractionWitness {
  Point x, y, z;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CertificateReport {
  Condition condition = Condition::root;
  std::string region;          // human description of the requested region
  Interval sampled;            // interval the triples were drawn from
  double eta = 0.0;
  unsigned m = 1;
  std::size_t samples = 0;     // requested random triples
  std::uint64_t seed = 0;
  std::size_t triples_checked = 0;  // random plus forced corner triples
  std::size_t violations = 0;
  std::vector<ContractionWitness> witnesses;

  bool seed_condition = false;
  double seed_log = 0.0;        // ln G(x0, Fx0, Fx0)
  double seed_bound_log = 0.0;  // ln((1 - eta) * gamma)

  bool holds_on_sample() const noexcept { return violations == 0; }
};

inline constexpr std::size_t kMaxContractionWitnesses = 16;

/// Evaluates `condition` on forced triples (region ends, the seed point,
/// degenerate triples x=y, y=z, x=y=z) and `n` stratified random triples.
/// Ball regions use the connected component of the ball around the seed,
/// clipped to the map's domain. Throws Error(empty_region) when nothing can
/// be sampled and std::invalid_argument for n == 0 or invalid params.
CertificateReport certify_region(const GMetric& g, const SelfMap& f,
                                 const ContractionParams& params, Condition condition,
                                 const Region& region, std::size_t n, std::uint64_t seed);

/// Recomputes a witness from scratch; true iff lhs > rhs + slack there.
bool witness_violates(const GMetric& g, const SelfMap& f, double eta, Condition condition,
                      const ContractionWitness& w);

}  // namespace mgfix
