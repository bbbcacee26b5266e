#include "mgfix/picard.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mgfix {

OrderRelation numeric_order() {
  return {"numeric <=", [](Point a, Point b) { return a.value() <= b.value(); }};
}

namespace {

[[noreturn]] void throw_domain_exit(const SelfMap& f, std::size_t j, Point x) {
  std::ostringstream os;
  os.precision(17);
  os << "iterate " << j << " left the domain " << f.domain().to_string() << " of " << f.description()
     << " (from x=" << x.value() << ")";
  throw Error(ErrorCode::domain_exit, os.str(), j);
}

// Applies F to the j-th iterate, raising domain_exit with the index of the
// iterate that is not admissible.
Point step(const SelfMap& f, Point x, std::size_t j) {
  if (!f.accepts(x)) throw_domain_exit(f, j, x);
  if (auto y = f.try_apply(x)) return *y;
  throw_domain_exit(f, j + 1, x);
}

}  // namespace

PicardTrace picard_trace(const SelfMap& f, Point x0, std::size_t steps, const GMetric& g,
                         const ClosedBall& ball, const OrderRelation& order) {
  PicardTrace trace;
  trace.iterates.reserve(steps + 1);
  trace.step_logs.reserve(steps);
  trace.in_ball.reserve(steps + 1);

  Point x = x0;
  if (!f.accepts(x)) throw_domain_exit(f, 0, x);
  trace.iterates.push_back(x);
  trace.in_ball.push_back(ball_contains(g, ball, x));
  for (std::size_t j = 0; j < steps; ++j) {
    const Point next = step(f, x, j);
    trace.step_logs.push_back(g(x, next, next));
    trace.iterates.push_back(next);
    trace.in_ball.push_back(ball_contains(g, ball, next));
    trace.monotone = trace.monotone && order.leq(next, x);
    x = next;
  }
  return trace;
}

LogDistance step_bound(LogDistance log_g01, double eta, std::size_t j) {
  return {std::pow(eta, static_cast<double>(j)) * log_g01.log};
}

std::size_t a_priori_iterations(LogDistance log_g01, double rate, double epsilon) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    std::ostringstream os;
    os << "rate " << rate << " is outside [0, 1): no geometric bound";
    throw Error(ErrorCode::rate_out_of_range, os.str());
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");

  const double tol = std::log1p(epsilon);
  const auto within = [&](std::size_t j) {
    return std::pow(rate, static_cast<double>(j)) * log_g01.log / (1.0 - rate) <= tol;
  };
  if (within(0)) return 0;
  if (rate == 0.0) return 1;

  const double estimate =
      std::ceil(std::log(log_g01.log / ((1.0 - rate) * tol)) / std::log(1.0 / rate));
  auto j = static_cast<std::size_t>(std::max(1.0, estimate));
  // The closed form can be off by one under rounding; settle it directly.
  while (j > 1 && within(j - 1)) --j;
  while (!within(j)) ++j;
  return j;
}

bool converged(const GMetric& g, Point x, Point p, double epsilon) {
  return g(x, p, p).log <= std::log1p(epsilon);
}

MuInfo mu_of(double eta) {
  MuInfo info;
  info.mu = eta / (1.0 - eta);
  if (info.mu < 0.5) {
    info.range = MuRange::within_stated;
  } else if (info.mu < 1.0) {
    info.range = MuRange::certifiable;
  } else {
    info.range = MuRange::uncertifiable;
  }
  return info;
}

std::string_view to_string(MuRange r) {
  switch (r) {
    case MuRange::within_stated: return "within-stated-range";
    case MuRange::certifiable: return "certifiable";
    case MuRange::uncertifiable: return "uncertified-rate";
  }
  return "unknown";
}

FixedPointResult solve_fixed_point(const GMetric& g, const SelfMap& f, const OrderRelation& order,
                                   const ContractionParams& params, const SolveOptions& options) {
  params.validate();
  if (!(options.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");

  const Point x0 = params.seed_point;
  if (!f.accepts(x0)) throw_domain_exit(f, 0, x0);
  if (!seed_condition_holds(g, f, params)) {
    std::ostringstream os;
    os.precision(17);
    os << "seed condition fails at x0=" << x0.value() << ": G(x0,Fx0,Fx0) > (1-eta)*gamma = "
       << (1.0 - params.eta) * params.gamma;
    throw Error(ErrorCode::seed_condition_violated, os.str());
  }

  FixedPointResult result;
  bool certifiable = true;
  if (options.mode == Condition::root) {
    result.rate = params.eta;
  } else {
    result.mu = mu_of(params.eta);
    result.rate = result.mu->mu;
    if (result.mu->range == MuRange::uncertifiable) {
      if (!options.allow_uncertified) {
        std::ostringstream os;
        os << "implicit rate mu = " << result.mu->mu << " >= 1 (eta = " << params.eta << ")";
        throw Error(ErrorCode::rate_out_of_range, os.str());
      }
      certifiable = false;
    }
  }

  const ClosedBall ball(x0, params.gamma);
  const Point fx0 = step(f, x0, 0);
  if (certifiable) {
    result.certified_bound = a_priori_iterations(g(x0, fx0, fx0), result.rate, options.epsilon);
  }

  const double tol = std::log1p(options.epsilon);
  PicardTrace& trace = result.trace;
  trace.iterates.push_back(x0);
  trace.in_ball.push_back(ball_contains(g, ball, x0));

  Point x = x0;
  for (std::size_t j = 0;; ++j) {
    const Point next = j == 0 ? fx0 : step(f, x, j);
    const LogDistance residual = g(x, next, next);
    trace.iterates.push_back(next);
    trace.step_logs.push_back(residual);
    trace.in_ball.push_back(ball_contains(g, ball, next));
    trace.monotone = trace.monotone && order.leq(next, x);

    if (residual.log <= tol) {
      result.point = x;
      result.residual_log = residual;
      result.iterations_used = j;
      break;
    }
    if (j >= options.max_iter) {
      std::ostringstream os;
      os.precision(17);
      os << "residual " << residual.log << " still above ln(1+eps) after " << j << " iterations";
      throw Error(ErrorCode::max_iterations_exceeded, os.str(), j);
    }
    x = next;
  }

  for (bool inside : trace.in_ball) result.left_ball = result.left_ball || !inside;
  result.order_certified = trace.monotone;
  return result;
}

}  // namespace mgfix
