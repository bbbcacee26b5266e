#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mgfix/contraction.hpp"
#include "mgfix/metric.hpp"
#include "mgfix/types.hpp"

namespace mgfix {

/// Partial order supplied by the caller.
struct OrderRelation {
  std::string description;
  std::function<bool(Point, Point)> leq;
};

/// The natural order on the nonnegative reals.
OrderRelation numeric_order();

/// Picard orbit x_{j+1} = F(x_j).
struct PicardTrace {
  std::vector<Point> iterates;
  std::vector<LogDistance> step_logs;  // ln G(x_j, x_{j+1}, x_{j+1})
  std::vector<bool> in_ball;           // one flag per iterate
  bool monotone = true;                // x_{j+1} <= x_j for every step
};

/// Runs `steps` Picard steps from x0. Throws Error(domain_exit) with the
/// offending iterate index when an iterate leaves F's domain.
PicardTrace picard_trace(const SelfMap& f, Point x0, std::size_t steps, const GMetric& g,
                         const ClosedBall& ball, const OrderRelation& order);

/// eta^j * logG01: the log-domain per-step bound after j steps.
LogDistance step_bound(LogDistance log_g01, double eta, std::size_t j);

/// Smallest j >= 0 with rate^j * logG01 / (1 - rate) <= ln(1 + epsilon).
/// Throws Error(rate_out_of_range) unless 0 <= rate < 1, and
/// std::invalid_argument unless epsilon > 0.
std::size_t a_priori_iterations(LogDistance log_g01, double rate, double epsilon);

/// G(x, p, p) <= 1 + epsilon.
bool converged(const GMetric& g, Point x, Point p, double epsilon);

enum class MuRange {
  within_stated,  // mu < 1/2
  certifiable,    // 1/2 <= mu < 1
  uncertifiable,  // mu >= 1
};

struct MuInfo {
  double mu = 0.0;
  MuRange range = MuRange::within_stated;
};

/// mu = eta / (1 - eta), the per-step rate of the implicit contraction.
MuInfo mu_of(double eta);

std::string_view to_string(MuRange r);

struct SolveOptions {
  Condition mode = Condition::root;
  double epsilon = 1e-6;
  std::size_t max_iter = 10000;
  /// In implicit mode with mu >= 1, iterate anyway and report no certified
  /// bound instead of throwing rate_out_of_range.
  bool allow_uncertified = false;
};

struct FixedPointResult {
  Point point;
  LogDistance residual_log;  // ln G(x*, Fx*, Fx*)
  std::size_t iterations_used = 0;
  std::optional<std::size_t> certified_bound;  // absent when the rate is uncertifiable
  double rate = 0.0;                           // eta (root) or mu (implicit)
  std::optional<MuInfo> mu;                    // implicit mode only
  PicardTrace trace;
  bool left_ball = false;        // some iterate fell outside the closed ball
  bool order_certified = true;   // trace.monotone under the supplied order
};

/// Picard iteration with a residual stop G(x_j, Fx_j, Fx_j) <= 1 + epsilon.
///
/// Checks the seed condition first (Error seed_condition_violated). The
/// certified bound is a_priori_iterations(G(x0,Fx0,Fx0), rate, epsilon).
/// Leaving the ball or a non-monotone orbit is reported through flags rather
/// than errors. Throws Error(max_iterations_exceeded) when the residual stays
/// above tolerance after max_iter steps, and Error(domain_exit) as
/// picard_trace does.
FixedPointResult solve_fixed_point(const GMetric& g, const SelfMap& f, const OrderRelation& order,
                                   const ContractionParams& params, const SolveOptions& options);

}  // namespace mgfix
