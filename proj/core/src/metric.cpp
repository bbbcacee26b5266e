#include "mgfix/metric.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace mgfix {

namespace {

double ordered_sum(double a, double b, double c) {
  std::array<double, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return (t[0] + t[1]) + t[2];
}

}  // namespace

GMetric gm_from_product(MultMetric d) {
  std::string description = "product of " + d.description();
  return GMetric(std::move(description), [d = std::move(d)](Point x, Point y, Point z) {
    return LogDistance{ordered_sum(d(x, y).log, d(y, z).log, d(z, x).log)};
  });
}

GMetric gm_from_exp(OrdinaryMetric d, std::string description) {
  return GMetric(std::move(description), [d = std::move(d)](Point x, Point y, Point z) {
    return LogDistance{ordered_sum(d(x, y), d(y, z), d(z, x))};
  });
}

ClosedBall::ClosedBall(Point center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ClosedBall: radius must be finite and > 0");
  }
}

double ClosedBall::log_radius() const { return std::log(radius_); }

bool ball_contains(const GMetric& g, const ClosedBall& ball, Point rho) {
  return g(ball.center(), rho, rho).log <= ball.log_radius();
}

namespace {

constexpr double kSearchReach = 1e12;

// Walks from the center toward `limit` (a carrier end) and returns the last
// point found inside the ball.
double extent_one_side(const GMetric& g, const ClosedBall& ball, double limit) {
  const double c = ball.center().value();
  const double dir = limit >= c ? 1.0 : -1.0;
  const auto inside = [&](double v) {
    return Point::is_carrier(v) && ball_contains(g, ball, Point(v));
  };

  double in = c;
  double out = c;
  bool bracketed = false;
  for (double step = 1e-6; step <= kSearchReach; step *= 2.0) {
    double cand = c + dir * step;
    const bool at_limit = dir > 0 ? cand >= limit : cand <= limit;
    if (at_limit) cand = limit;
    if (inside(cand)) {
      in = cand;
      if (at_limit) return in;
    } else {
      out = cand;
      bracketed = true;
      break;
    }
  }
  if (!bracketed) return in;

  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (in + out);
    if (mid == in || mid == out) break;
    (inside(mid) ? in : out) = mid;
  }
  return in;
}

}  // namespace

Interval ball_extent(const GMetric& g, const ClosedBall& ball, const Interval& carrier) {
  const double c = ball.center().value();
  if (!ball_contains(g, ball, ball.center()) || !carrier.contains(c)) {
    return Interval::open(c, c);
  }
  const double lo = c > carrier.lo ? extent_one_side(g, ball, carrier.first()) : c;
  const double hi_limit = std::isfinite(carrier.hi) ? carrier.last() : c + kSearchReach;
  const double hi = extent_one_side(g, ball, hi_limit);
  return Interval::closed(lo, hi);
}

}  // namespace mgfix
