#include "mgfix/corpus.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mgfix {

double usual_metric(Point x, Point y) { return std::abs(x.value() - y.value()); }

Point map_quarter_shift(Point x) {
  const double v = x.value();
  return Point(v < 1.0 / 3.0 ? v / 4.0 : v - 1.0 / 3.0);
}

Point map_half_shift(Point x) {
  const double v = x.value();
  return Point(v < 0.5 ? v / 2.0 : v - 0.25);
}

GMetric exp_usual_space() { return gm_from_exp(usual_metric, "exp(|x-y| + |y-z| + |z-x|)"); }

MultMetric exp_distance_metric() {
  return MultMetric("exp(|x-y|)", [](Point x, Point y) { return LogDistance{usual_metric(x, y)}; });
}

// ---- PiecewiseLinearMap ------------------------------------------------------

namespace {

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::invalid_config, what);
}

}  // namespace

PiecewiseLinearMap::PiecewiseLinearMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) bad_config("map: at least one piece is required");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.span.empty()) bad_config("map: piece " + std::to_string(i) + " has an empty span");
    if (!std::isfinite(p.slope) || !std::isfinite(p.offset)) {
      bad_config("map: piece " + std::to_string(i) + " has a non-finite coefficient");
    }
    if (i == 0) continue;
    const Interval& prev = pieces_[i - 1].span;
    const bool joined = prev.hi == p.span.lo && (prev.hi_closed != p.span.lo_closed);
    if (!joined) {
      bad_config("map: piece " + std::to_string(i) +
                 " must start exactly where the previous one ends, with one side closed");
    }
  }
}

Interval PiecewiseLinearMap::hull() const {
  const Interval& a = pieces_.front().span;
  const Interval& b = pieces_.back().span;
  return {a.lo, b.hi, a.lo_closed, b.hi_closed};
}

std::optional<double> PiecewiseLinearMap::operator()(double x) const {
  for (const Piece& p : pieces_) {
    if (p.span.contains(x)) return p.slope * x + p.offset;
  }
  return std::nullopt;
}

SelfMap PiecewiseLinearMap::to_self_map(std::string description) const {
  return SelfMap(std::move(description), hull(), [map = *this](double x) {
    return map(x).value_or(std::numeric_limits<double>::quiet_NaN());
  });
}

std::vector<Breakpoint> breakpoints_of(const PiecewiseLinearMap& map) {
  std::vector<Breakpoint> out;
  const auto& pieces = map.pieces();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const auto& left = pieces[i - 1];
    const double at = pieces[i].span.lo;
    Breakpoint b;
    b.at = at;
    b.left_limit = left.slope * at + left.offset;
    b.value = *map(at);
    b.continuous = std::abs(b.left_limit - b.value) <= 1e-12;
    out.push_back(b);
  }
  return out;
}

// ---- registry ----------------------------------------------------------------

namespace {

constexpr double kStockEta = 5.0 / 8.0;
constexpr double kStockGamma = 11.0 / 2.0;
const Point kStockSeed(1.0 / 3.0);

NamedFixture make_exp_usual() {
  return {"exp-usual", "G from exp of the usual metric on [0, inf)", exp_usual_space(),
          std::nullopt, std::nullopt, std::nullopt, {}};
}

NamedFixture make_product_exp() {
  MultMetric d = exp_distance_metric();
  return {"product-exp", "product G over d(x,y) = exp(|x-y|)", gm_from_product(d), d,
          std::nullopt, std::nullopt, {}};
}

NamedFixture make_quarter_shift() {
  NamedFixture f = make_exp_usual();
  f.id = "ex33";
  f.description = "x/4 on [0,1/3), x-1/3 on [1/3,inf) over exp-usual";
  f.map = SelfMap("x/4 | x-1/3", Interval::nonnegative(),
                  [](double x) { return map_quarter_shift(Point(x)).value(); });
  f.params = ContractionParams{kStockEta, 1, kStockGamma, kStockSeed};
  f.breakpoints = {{1.0 / 3.0, (1.0 / 3.0) / 4.0, 0.0, false}};
  return f;
}

NamedFixture make_half_shift() {
  NamedFixture f = make_exp_usual();
  f.id = "ex37";
  f.description = "x/2 on [0,1/2) (0 at 0), x-1/4 on [1/2,inf) over exp-usual";
  f.map = SelfMap("x/2 | x-1/4", Interval::nonnegative(),
                  [](double x) { return map_half_shift(Point(x)).value(); });
  f.params = ContractionParams{kStockEta, 1, kStockGamma, kStockSeed};
  f.breakpoints = {{0.5, 0.25, 0.25, true}};
  return f;
}

}  // namespace

const std::vector<NamedFixture>& registry() {
  static const std::vector<NamedFixture> fixtures{make_exp_usual(), make_product_exp(),
                                                  make_quarter_shift(), make_half_shift()};
  return fixtures;
}

std::optional<NamedFixture> find_fixture(std::string_view id) {
  for (const auto& f : registry()) {
    if (f.id == id) return f;
  }
  return std::nullopt;
}

// ---- config loading ----------------------------------------------------------

namespace {

using nlohmann::json;

double number_at(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    bad_config(std::string("expected number field '") + key + "'");
  }
  return obj.at(key).get<double>();
}

bool flag_at(const json& obj, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean()) bad_config(std::string("expected boolean field '") + key + "'");
  return obj.at(key).get<bool>();
}

void apply_space(NamedFixture& f, const json& space) {
  std::string kind;
  if (space.is_string()) {
    kind = space.get<std::string>();
  } else if (space.is_object() && space.contains("kind") && space.at("kind").is_string()) {
    kind = space.at("kind").get<std::string>();
  } else {
    bad_config("'space' must be a string or an object with a 'kind'");
  }

  if (kind == "exp-usual") {
    f.space = exp_usual_space();
    f.base_metric.reset();
  } else if (kind == "product-exp") {
    MultMetric d = exp_distance_metric();
    f.space = gm_from_product(d);
    f.base_metric = std::move(d);
  } else if (kind == "product-affine") {
    if (!space.is_object()) bad_config("product-affine needs 'abs' and 'signed' coefficients");
    const double a = number_at(space, "abs");
    const double b = number_at(space, "signed");
    std::ostringstream label;
    label.precision(17);
    label << "exp(" << a << "|x-y| + " << b << "(x-y))";
    MultMetric d(label.str(), [a, b](Point x, Point y) {
      const double diff = x.value() - y.value();
      return LogDistance{a * std::abs(diff) + b * diff};
    });
    f.space = gm_from_product(d);
    f.base_metric = std::move(d);
  } else {
    bad_config("unknown space kind '" + kind + "'");
  }
}

PiecewiseLinearMap parse_map(const json& rows) {
  if (!rows.is_array()) bad_config("'map' must be an array of pieces");
  std::vector<PiecewiseLinearMap::Piece> pieces;
  for (const json& row : rows) {
    if (!row.is_object()) bad_config("map piece must be an object");
    PiecewiseLinearMap::Piece p;
    p.span.lo = number_at(row, "lo");
    if (!row.contains("hi") || row.at("hi").is_null()) {
      p.span.hi = std::numeric_limits<double>::infinity();
      p.span.hi_closed = false;
    } else {
      p.span.hi = number_at(row, "hi");
      p.span.hi_closed = flag_at(row, "hi_closed", false);
    }
    p.span.lo_closed = flag_at(row, "lo_closed", true);
    p.slope = number_at(row, "slope");
    p.offset = number_at(row, "offset");
    if (p.span.lo < 0.0) bad_config("map piece starts below 0");
    pieces.push_back(p);
  }
  return PiecewiseLinearMap(std::move(pieces));
}

}  // namespace

NamedFixture load_fixture_config(const json& config) {
  if (!config.is_object()) bad_config("config must be a JSON object");
  NamedFixture f = make_exp_usual();
  f.id = config.value("id", std::string("config"));
  f.description = "user fixture '" + f.id + "'";
  if (!config.contains("space")) bad_config("config needs a 'space'");
  apply_space(f, config.at("space"));

  if (config.contains("map")) {
    const PiecewiseLinearMap map = parse_map(config.at("map"));
    f.map = map.to_self_map("piecewise-linear map of '" + f.id + "'");
    f.breakpoints = breakpoints_of(map);
  }
  if (config.contains("params")) {
    const json& p = config.at("params");
    if (!p.is_object()) bad_config("'params' must be an object");
    const double x0 = number_at(p, "x0");
    if (!Point::is_carrier(x0)) bad_config("params.x0 must be finite and >= 0");
    ContractionParams params{number_at(p, "eta"), 1, number_at(p, "gamma"), Point(x0)};
    if (p.contains("m")) {
      if (!p.at("m").is_number_unsigned()) bad_config("params.m must be a positive integer");
      params.m = p.at("m").get<unsigned>();
    }
    try {
      params.validate();
    } catch (const std::invalid_argument& e) {
      bad_config(std::string("params: ") + e.what());
    }
    f.params = params;
  }
  return f;
}

NamedFixture load_fixture_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad_config("cannot open config file " + path.string());
  json config;
  try {
    in >> config;
  } catch (const json::parse_error& e) {
    bad_config("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return load_fixture_config(config);
}

}  // namespace mgfix
