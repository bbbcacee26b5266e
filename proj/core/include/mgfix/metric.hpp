#pragma once

#include <functional>
#include <string>
#include <utility>

#include "mgfix/types.hpp"

namespace mgfix {

/// Binary multiplicative distance, evaluated in log-domain.
class MultMetric {
 public:
  using Fn = std::function<LogDistance(Point, Point)>;

  MultMetric(std::string description, Fn dist)
      : description_(std::move(description)), dist_(std::move(dist)) {}

  LogDistance operator()(Point x, Point y) const { return dist_(x, y); }
  const std::string& description() const noexcept { return description_; }

 private:
  std::string description_;
  Fn dist_;
};

/// Ternary multiplicative G-metric, evaluated in log-domain.
class GMetric {
 public:
  using Fn = std::function<LogDistance(Point, Point, Point)>;

  GMetric(std::string description, Fn g)
      : description_(std::move(description)), g_(std::move(g)) {}

  LogDistance operator()(Point x, Point y, Point z) const { return g_(x, y, z); }
  const std::string& description() const noexcept { return description_; }

 private:
  std::string description_;
  Fn g_;
};

/// Ordinary (additive) metric on the carrier.
using OrdinaryMetric = std::function<double(Point, Point)>;

/// G(x,y,z) = d(x,y) * d(y,z) * d(z,x).
///
/// The three log terms are summed in ascending order so that every argument
/// permutation yields the bitwise-identical result whenever d is symmetric.
GMetric gm_from_product(MultMetric d);

/// G(x,y,z) = exp(d(x,y) + d(y,z) + d(z,x)) for an ordinary metric d.
/// Stored as the exponent; same summation order as gm_from_product.
GMetric gm_from_exp(OrdinaryMetric d, std::string description = "exp of ordinary metric");

/// Closed ball {rho : G(center, rho, rho) <= radius}. The radius is on the
/// multiplicative scale; radius < 1 gives the empty ball.
class ClosedBall {
 public:
  ClosedBall(Point center, double radius);

  Point center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  double log_radius() const;
  bool nonempty() const noexcept { return radius_ >= 1.0; }

 private:
  Point center_;
  double radius_;
};

bool ball_contains(const GMetric& g, const ClosedBall& ball, Point rho);

/// Connected component of the ball that contains its center, restricted to
/// `carrier`, found by outward doubling and then bisection on each side.
/// Returns an empty interval when the ball is empty. Unbounded carriers are
/// searched up to 1e12 away from the center.
Interval ball_extent(const GMetric& g, const ClosedBall& ball,
                     const Interval& carrier = Interval::nonnegative());

}  // namespace mgfix
