#include <cmath>

#include <gtest/gtest.h>

#include "mgfix/corpus.hpp"
#include "mgfix/picard.hpp"

using namespace mgfix;

namespace {

const NamedFixture& fixture(const char* id) {
  for (const auto& f : registry())
    if (f.id == id) return f;
  throw std::logic_error(id);
}

// Smallest j in [0, 100] meeting the a-priori inequality, or 101.
std::size_t brute_force_bound(double log_g01, double rate, double eps) {
  for (std::size_t j = 0; j <= 100; ++j) {
    if (std::pow(rate, static_cast<double>(j)) * log_g01 / (1.0 - rate) <= std::log1p(eps)) return j;
  }
  return 101;
}

PicardTrace trace_of(const char* id, std::size_t steps) {
  const auto& f = fixture(id);
  return picard_trace(*f.map, f.params->seed_point, steps, f.space,
                      ClosedBall(f.params->seed_point, f.params->gamma), numeric_order());
}

}  // namespace

TEST(PicardTrace, QuarterShiftReachesZeroInOneStep) {
  const PicardTrace t = trace_of("ex33", 3);
  ASSERT_EQ(t.iterates.size(), 4u);
  EXPECT_EQ(t.iterates[0].value(), 1.0 / 3.0);
  for (std::size_t j = 1; j < 4; ++j) EXPECT_EQ(t.iterates[j].value(), 0.0);
  EXPECT_NEAR(t.step_logs[0].log, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(t.step_logs[1].log, 0.0);
  EXPECT_TRUE(t.monotone);
  for (bool b : t.in_ball) EXPECT_TRUE(b);
}

TEST(PicardTrace, HalfShiftHalves) {
  const PicardTrace t = trace_of("ex37", 2);
  ASSERT_EQ(t.iterates.size(), 3u);
  EXPECT_DOUBLE_EQ(t.iterates[1].value(), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(t.iterates[2].value(), 1.0 / 12.0);
}

TEST(PicardTrace, DomainExitReportsIndex) {
  const GMetric g = exp_usual_space();
  const SelfMap shrink("x-1 on [0,3]", Interval::closed(0, 3), [](double x) { return x + 1.0; });
  try {
    picard_trace(shrink, Point(1.0), 5, g, ClosedBall(Point(1.0), 100.0), numeric_order());
    FAIL() << "expected DomainExit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::domain_exit);
    EXPECT_EQ(e.index(), 3u);  // x_3 = 4 lies outside [0, 3]
  }
}

TEST(PicardTrace, NonMonotoneOrbitIsFlagged) {
  const GMetric g = exp_usual_space();
  const SelfMap flip("1-x", Interval::closed(0, 1), [](double x) { return 1.0 - x; });
  const PicardTrace t = picard_trace(flip, Point(0.25), 2, g, ClosedBall(Point(0.25), 1.2), numeric_order());
  EXPECT_FALSE(t.monotone);
  EXPECT_FALSE(t.in_ball[1]);  // G(1/4, 3/4, 3/4) = e > 1.2
}

TEST(StepBound, Value) {
  EXPECT_NEAR(step_bound(LogDistance{2.0 / 3.0}, 5.0 / 8.0, 2).log, 0.2604166666666667, 1e-15);
  EXPECT_EQ(step_bound(LogDistance{2.0 / 3.0}, 5.0 / 8.0, 0).log, 2.0 / 3.0);
}

TEST(APriori, MatchesBruteForce) {
  EXPECT_EQ(a_priori_iterations(LogDistance{1.0 / 3.0}, 5.0 / 8.0, 1e-6), 30u);
  EXPECT_EQ(brute_force_bound(1.0 / 3.0, 5.0 / 8.0, 1e-6), 30u);
  for (double rate : {0.1, 0.25, 0.5, 0.625, 0.9}) {
    for (double lg : {1e-3, 0.2, 1.0 / 3.0, 2.0 / 3.0, 3.0}) {
      for (double eps : {1e-3, 1e-6, 1e-9}) {
        const std::size_t want = brute_force_bound(lg, rate, eps);
        if (want > 100) continue;
        EXPECT_EQ(a_priori_iterations(LogDistance{lg}, rate, eps), want)
            << rate << ' ' << lg << ' ' << eps;
      }
    }
  }
}

TEST(APriori, EdgeCases) {
  EXPECT_EQ(a_priori_iterations(LogDistance{1.0 / 3.0}, 0.0, 1e-6), 1u);
  EXPECT_EQ(a_priori_iterations(LogDistance{0.0}, 0.5, 1e-6), 0u);
  EXPECT_THROW(a_priori_iterations(LogDistance{1.0}, 1.0, 1e-6), Error);
  EXPECT_THROW(a_priori_iterations(LogDistance{1.0}, -0.1, 1e-6), Error);
  EXPECT_THROW(a_priori_iterations(LogDistance{1.0}, 0.5, 0.0), std::invalid_argument);
}

TEST(Converged, Threshold) {
  const GMetric g = exp_usual_space();
  EXPECT_TRUE(converged(g, Point(1e-7), Point(0.0), 1e-6));
  EXPECT_FALSE(converged(g, Point(0.1), Point(0.0), 1e-6));
}

TEST(Mu, Ranges) {
  EXPECT_NEAR(mu_of(0.25).mu, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(mu_of(0.25).range, MuRange::within_stated);
  EXPECT_EQ(mu_of(0.4).range, MuRange::certifiable);
  EXPECT_NEAR(mu_of(5.0 / 8.0).mu, 5.0 / 3.0, 1e-15);
  EXPECT_EQ(mu_of(5.0 / 8.0).range, MuRange::uncertifiable);
  EXPECT_EQ(to_string(MuRange::uncertifiable), "uncertified-rate");
}

TEST(Solve, QuarterShift) {
  const auto& f = fixture("ex33");
  const auto r = solve_fixed_point(f.space, *f.map, numeric_order(), *f.params, {});
  EXPECT_EQ(r.point.value(), 0.0);
  EXPECT_EQ(r.iterations_used, 1u);
  EXPECT_EQ(r.residual_log.log, 0.0);
  ASSERT_TRUE(r.certified_bound);
  EXPECT_LE(r.iterations_used, *r.certified_bound);
  EXPECT_FALSE(r.left_ball);
}

TEST(Solve, HalfShiftRoot) {
  const auto& f = fixture("ex37");
  const auto r = solve_fixed_point(f.space, *f.map, numeric_order(), *f.params, {});
  EXPECT_LE(r.point.value(), 1e-6);
  EXPECT_LE(r.residual_log.log, std::log1p(1e-6));
  ASSERT_TRUE(r.certified_bound);
  EXPECT_EQ(*r.certified_bound, 30u);
  EXPECT_LE(r.iterations_used, 30u);
  EXPECT_EQ(r.iterations_used, 19u);  // (1/3) / 2^19 < 1e-6 <= (1/3) / 2^18
  EXPECT_TRUE(r.order_certified);
}

TEST(Solve, ImplicitModeRateHandling) {
  const auto& f = fixture("ex37");
  SolveOptions opts;
  opts.mode = Condition::implicit;
  try {
    solve_fixed_point(f.space, *f.map, numeric_order(), *f.params, opts);
    FAIL() << "expected RateOutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::rate_out_of_range);
  }
  opts.allow_uncertified = true;
  const auto r = solve_fixed_point(f.space, *f.map, numeric_order(), *f.params, opts);
  EXPECT_FALSE(r.certified_bound);
  ASSERT_TRUE(r.mu);
  EXPECT_EQ(r.mu->range, MuRange::uncertifiable);
  EXPECT_LE(r.point.value(), 1e-6);

  // x/4 on [0, 1/3) meets the implicit condition with eta = 1/4, so mu = 1/3
  // gives a bound the orbit must respect.
  const auto& q = fixture("ex33");
  const ContractionParams low{0.25, 1, 4.0, Point(0.3)};
  opts.allow_uncertified = false;
  const auto c = solve_fixed_point(q.space, *q.map, numeric_order(), low, opts);
  ASSERT_TRUE(c.certified_bound);
  EXPECT_LE(c.iterations_used, *c.certified_bound);
}

TEST(Solve, SeedConditionAndIterationCap) {
  const auto& f = fixture("ex37");
  ContractionParams tight{0.99, 1, 1.0, Point(1.0 / 3.0)};
  try {
    solve_fixed_point(f.space, *f.map, numeric_order(), tight, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::seed_condition_violated);
  }
  SolveOptions capped;
  capped.max_iter = 5;
  try {
    solve_fixed_point(f.space, *f.map, numeric_order(), *f.params, capped);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::max_iterations_exceeded);
  }
}

TEST(Solve, StepLogsObeyGeometricBound) {
  const auto& f = fixture("ex37");
  const auto r = solve_fixed_point(f.space, *f.map, numeric_order(), *f.params, {});
  const auto& s = r.trace.step_logs;
  for (std::size_t j = 0; j < s.size(); ++j) {
    EXPECT_LE(s[j].log, step_bound(s[0], 5.0 / 8.0, j).log + 1e-12) << j;
  }
}
