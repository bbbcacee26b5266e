#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mgfix/metric.hpp"
#include "mgfix/types.hpp"

namespace mgfix {

/// A tuple of points at which an axiom failed, with both sides of the
/// violated relation (log-domain).
struct Witness {
  std::vector<Point> points;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct AxiomStatus {
  std::string id;
  std::string statement;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;  // first kMaxWitnesses violations, in check order

  bool passed() const noexcept { return violations == 0; }
};

struct AxiomReport {
  std::string suite;
  std::string subject;
  Interval domain;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomStatus> axioms;

  bool passed() const noexcept;
  const AxiomStatus* find(std::string_view id) const noexcept;
};

inline constexpr std::size_t kMaxWitnesses = 8;

// Each checker evaluates its axioms on a fixed corner set (every 4-tuple over
// {lo, midpoint, hi}, and all orderings of one random triple) followed by `n`
// uniformly drawn 4-tuples. Deterministic in `seed`. Throws
// std::invalid_argument for n == 0 or an empty/unbounded domain.

/// Axioms of a multiplicative metric, ids M1..M4:
///   M1  d(x,y) >= 1
///   M2  d(x,y) = 1 iff x = y
///   M3  d(x,y) = d(y,x)
///   M4  d(x,y) <= d(x,z) d(z,y)
AxiomReport check_mult_axioms(const MultMetric& d, const Interval& domain, std::size_t n,
                              std::uint64_t seed);

/// Axioms of a multiplicative G-metric, ids G1..G5:
///   G1  G(x,x,x) = 1
///   G2  G(x,x,y) > 1 for x != y
///   G3  G(x,x,y) <= G(x,y,z) for y != z
///   G4  G invariant under argument permutation
///   G5  G(x,y,z) <= G(x,t,t) G(t,y,z)
AxiomReport check_gm_axioms(const GMetric& g, const Interval& domain, std::size_t n,
                            std::uint64_t seed);

/// Standard consequences of the G-metric axioms, ids P1..P4:
///   P1  G(x,x,x) = 1
///   P2  G(x,y,z) <= G(x,t,t) G(y,t,t) G(z,t,t)
///   P3  G(x,y,z) <= G(x,x,y) G(x,x,z)
///   P4  G(x,y,y) <= G(y,x,x)^2
AxiomReport check_gm_consequences(const GMetric& g, const Interval& domain, std::size_t n,
                                  std::uint64_t seed);

/// Re-evaluates a witness from scratch. True iff the named axiom applies to
/// the witness points and is violated there.
bool witness_violates(const MultMetric& d, std::string_view axiom_id, const Witness& w);
bool witness_violates(const GMetric& g, std::string_view axiom_id, const Witness& w);

}  // namespace mgfix
