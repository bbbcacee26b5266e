#include "mgfix/types.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace mgfix {

double LogDistance::multiplicative() const { return std::exp(log); }

bool Interval::contains(double x) const {
  if (std::isnan(x)) return false;
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

bool Interval::empty() const {
  if (std::isnan(lo) || std::isnan(hi)) return true;
  if (lo < hi) return false;
  if (lo > hi) return true;
  return !(lo_closed && hi_closed);
}

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

double Interval::first() const {
  return lo_closed ? lo : std::nextafter(lo, hi);
}

double Interval::last() const {
  return hi_closed ? hi : std::nextafter(hi, lo);
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << (lo_closed ? '[' : '(') << lo << ", ";
  if (std::isinf(hi)) {
    os << "inf";
  } else {
    os << hi;
  }
  os << (hi_closed ? ']' : ')');
  return os.str();
}

namespace {

std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Interval> Interval::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto lo = parse_double(text.substr(0, colon));
  auto hi = parse_double(text.substr(colon + 1));
  if (!lo || !hi || !std::isfinite(*lo) || !std::isfinite(*hi) || *lo > *hi) {
    return std::nullopt;
  }
  return Interval::closed(*lo, *hi);
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_region: return "EmptyRegion";
    case ErrorCode::seed_condition_violated: return "SeedConditionViolated";
    case ErrorCode::rate_out_of_range: return "RateOutOfRange";
    case ErrorCode::max_iterations_exceeded: return "MaxIterationsExceeded";
    case ErrorCode::domain_exit: return "DomainExit";
    case ErrorCode::invalid_config: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace mgfix
