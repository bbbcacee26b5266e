#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mgfix/contraction.hpp"
#include "mgfix/metric.hpp"
#include "mgfix/types.hpp"

namespace mgfix {

/// |x - y|.
double usual_metric(Point x, Point y);

/// x/4 on [0, 1/3), x - 1/3 on [1/3, inf). Fixed point 0; jumps at 1/3.
Point map_quarter_shift(Point x);

/// x/2 on (0, 1/2), x - 1/4 on [1/2, inf), and 0 at 0 (the limit of x/2).
/// Fixed point 0; continuous at 1/2.
Point map_half_shift(Point x);

/// exp(|x-y| + |y-z| + |z-x|), stored as the exponent.
GMetric exp_usual_space();

/// d(x,y) = exp(|x - y|).
MultMetric exp_distance_metric();

/// Piecewise-linear self-map: each piece maps x to slope * x + offset on its
/// span. Spans must be sorted, non-overlapping and contiguous.
class PiecewiseLinearMap {
 public:
  struct Piece {
    Interval span;
    double slope = 0.0;
    double offset = 0.0;
  };

  /// Throws Error(invalid_config) on empty, unsorted, overlapping or gapped
  /// spans.
  explicit PiecewiseLinearMap(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  Interval hull() const;
  std::optional<double> operator()(double x) const;
  SelfMap to_self_map(std::string description) const;

 private:
  std::vector<Piece> pieces_;
};

/// Behavior of a map at a branch boundary.
struct Breakpoint {
  double at = 0.0;
  double left_limit = 0.0;
  double value = 0.0;
  bool continuous = false;
};

std::vector<Breakpoint> breakpoints_of(const PiecewiseLinearMap& map);

struct NamedFixture {
  std::string id;
  std::string description;
  GMetric space;
  std::optional<MultMetric> base_metric;  // set when the space is a product of d
  std::optional<SelfMap> map;
  std::optional<ContractionParams> params;
  std::vector<Breakpoint> breakpoints;
};

/// Built-in fixtures: "exp-usual", "product-exp", "ex33", "ex37".
const std::vector<NamedFixture>& registry();

std::optional<NamedFixture> find_fixture(std::string_view id);

/// User fixture from JSON:
///
///   {
///     "id": "custom",
///     "space": "exp-usual" | "product-exp"
///              | {"kind": "product-affine", "abs": a, "signed": b},
///     "map": [{"lo": 0, "hi": 0.5, "lo_closed": true, "hi_closed": false,
///              "slope": 0.5, "offset": 0}, ...],      // optional; "hi": null is +inf
///     "params": {"eta": 0.625, "gamma": 5.5, "x0": 0.333, "m": 1}   // optional
///   }
///
/// product-affine is the product G-metric over ln d(x,y) = a|x-y| + b(x-y).
/// Throws Error(invalid_config) on any schema violation.
NamedFixture load_fixture_config(const nlohmann::json& config);
NamedFixture load_fixture_file(const std::filesystem::path& path);

}  // namespace mgfix
