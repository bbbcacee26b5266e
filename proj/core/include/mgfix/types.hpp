#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mgfix {

/// Absolute tolerance, in log-domain, applied to every inequality check.
inline constexpr double kLogSlack = 1e-12;

/// Element of the carrier set: a finite nonnegative real.
class Point {
 public:
  constexpr Point() = default;
  constexpr explicit Point(double v) : value_(v) {
    if (!is_carrier(v)) {
      throw std::domain_error("Point: value must be finite and >= 0");
    }
  }

  static constexpr bool is_carrier(double v) noexcept {
    return v >= 0.0 && v <= std::numeric_limits<double>::max();
  }

  constexpr double value() const noexcept { return value_; }

  friend constexpr auto operator<=>(Point, Point) = default;

 private:
  double value_ = 0.0;
};

/// Natural logarithm of a multiplicative distance.
///
/// A well-formed distance has log >= 0 (distance >= 1). The type does not
/// enforce this because axiom checkers must be able to observe metrics that
/// break it.
struct LogDistance {
  double log = 0.0;

  /// exp(log): the multiplicative value. Only called at output boundaries.
  double multiplicative() const;

  friend constexpr LogDistance operator+(LogDistance a, LogDistance b) {
    return {a.log + b.log};
  }
  friend constexpr LogDistance operator*(double s, LogDistance a) {
    return {s * a.log};
  }
  friend constexpr auto operator<=>(LogDistance, LogDistance) = default;
};

/// Real interval with independently open or closed ends. `hi` may be +inf.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval half_open(double lo, double hi) { return {lo, hi, true, false}; }
  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval nonnegative() {
    return {0.0, std::numeric_limits<double>::infinity(), true, false};
  }

  bool contains(double x) const;
  bool empty() const;
  bool bounded() const;
  double width() const { return hi - lo; }

  /// Smallest / largest member that is representable, nudged inward for
  /// open ends. Only meaningful for nonempty bounded intervals.
  double first() const;
  double last() const;

  /// "[lo, hi)" style rendering.
  std::string to_string() const;

  /// Parses the `lo:hi` command-line syntax into a closed interval.
  static std::optional<Interval> parse(std::string_view text);

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval intersect(const Interval& a, const Interval& b);

enum class ErrorCode {
  empty_region,
  seed_condition_violated,
  rate_out_of_range,
  max_iterations_exceeded,
  domain_exit,
  invalid_config,
};

std::string_view to_string(ErrorCode code);

/// Failure of a library operation. `index()` carries the iterate index for
/// domain_exit and the iteration count for max_iterations_exceeded.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = {})
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace mgfix
