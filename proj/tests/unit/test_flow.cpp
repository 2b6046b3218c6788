#include <gtest/gtest.h>

#include <cmath>

#include "bachflow/flow.hpp"

using namespace bachflow;

namespace {
using DMetric = DiagonalMetric<double>;

SolitonCertificate<Rational> su2_soliton() {
  return verify_soliton(GeometryId::r_x_su2, DiagonalMetric<Rational>{{1, 4, 4, 1}});
}
}  // namespace

TEST(StepFlow, FlatIsUnchanged) {
  const DMetric g{{1.5, 2, 3, 4}};
  for (double dt : {0.1, 1.0, 100.0}) {
    EXPECT_EQ(step_flow(GeometryId::r_x_r3, g, dt, Integrator::rk4), g);
    EXPECT_EQ(step_flow(GeometryId::r_x_r3, g, dt, Integrator::rk45), g);
  }
}

TEST(StepFlow, RoundSu2IsFixedPoint) {
  const DMetric g{{1, 1, 1, 1}};
  const auto next = step_flow(GeometryId::r_x_su2, g, 0.5, Integrator::rk4);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(next[i], 1.0, 1e-15);
}

TEST(StepFlow, SphereFactorShrinksAtInitialRate) {
  const DMetric g{{1, 1, 1, 1}};
  const double dt = 1e-4;
  const auto next = step_flow(GeometryId::r2_x_s2, g, dt, Integrator::rk4);
  EXPECT_NEAR((next[2] - 1.0) / dt, -1.0 / 12, 1e-5);
  EXPECT_NEAR((next[0] - 1.0) / dt, 1.0 / 12, 1e-5);
  EXPECT_LT(next[2], 1.0);
}

TEST(StepFlow, RejectsBadInput) {
  EXPECT_THROW(step_flow(GeometryId::r_x_su2, DMetric{{1, 1, 1, 1}}, 0.0, Integrator::rk4), DomainError);
  EXPECT_THROW(step_flow(GeometryId::r_x_su2, DMetric{{1, 0, 1, 1}}, 0.1, Integrator::rk4), DomainError);
}

TEST(StepFlow, StepPastCollapseSignalsSingularity) {
  const DMetric g{{1, 1, 1, 1}};
  try {
    step_flow(GeometryId::r2_x_s2, g, 1e6, Integrator::rk4);
    FAIL() << "expected SingularityError";
  } catch (const SingularityError& e) {
    EXPECT_EQ(e.last_state(), g);
    EXPECT_NEAR(e.info().estimated_time, 6.0, 1e-12);
  }
}

TEST(RunFlow, Su2SolitonSelfSimilar) {
  const auto traj = run_flow(GeometryId::r_x_su2, DMetric{{1, 4, 4, 1}}, 768.0);
  ASSERT_FALSE(traj.singularity.has_value());
  const auto& last = traj.samples.back();
  EXPECT_EQ(last.t, 768.0);
  EXPECT_NEAR(last.g[1] / 8.0, 1.0, 1e-6);
  EXPECT_NEAR(last.g[2] / 8.0, 1.0, 1e-6);
  EXPECT_NEAR(last.g[3] / 2.0, 1.0, 1e-6);
  EXPECT_NEAR(last.g[0] / 0.125, 1.0, 1e-6);
  EXPECT_LT(self_similarity_check(GeometryId::r_x_su2, su2_soliton(), traj), 1e-6);
}

TEST(RunFlow, SphereProductCollapsesAtSix) {
  const auto traj = run_flow(GeometryId::r2_x_s2, DMetric{{1, 1, 1, 1}}, 10.0);
  ASSERT_TRUE(traj.singularity.has_value());
  EXPECT_NEAR(traj.singularity->time, 6.0, 0.06);
  EXPECT_NEAR(traj.singularity->estimated_time, 6.0, 0.06);
  EXPECT_EQ(traj.singularity->slot, 2u);
}

TEST(RunFlow, SphereProductSelfSimilarBeforeCollapse) {
  const auto cert = verify_soliton(GeometryId::r2_x_s2, DiagonalMetric<Rational>{{1, 1, 1, 1}});
  const auto traj = run_flow(GeometryId::r2_x_s2, DMetric{{1, 1, 1, 1}}, 5.0);
  ASSERT_FALSE(traj.singularity.has_value());
  EXPECT_LT(self_similarity_check(GeometryId::r2_x_s2, cert, traj), 1e-6);
  for (const auto& s : traj.samples) EXPECT_NEAR(s.g[2], std::sqrt(1 - s.t / 6), 1e-8);
}

TEST(RunFlow, SteadyIsFixedPoint) {
  const auto cert = verify_soliton(GeometryId::r_x_e2, DiagonalMetric<Rational>{{1, 2, 2, 5}});
  const auto traj = run_flow(GeometryId::r_x_e2, DMetric{{1, 2, 2, 5}}, 10.0);
  EXPECT_EQ(self_similarity_check(GeometryId::r_x_e2, cert, traj), 0.0);
}

TEST(RunFlow, TraceResidualStaysSmall) {
  for (const auto& g : {DMetric{{1, 4, 4, 1}}, DMetric{{1, 1, 2, 3}}, DMetric{{2, 0.5, 1, 3}}}) {
    const auto traj = run_flow(GeometryId::r_x_su2, g, 50.0);
    for (const auto& s : traj.samples) EXPECT_LT(s.trace_residual, 1e-10);
  }
  const auto sl = run_flow(GeometryId::r_x_sl2r, DMetric{{1, 1, 2, 3}}, 5.0);
  for (const auto& s : sl.samples) EXPECT_LT(s.trace_residual, 1e-10);
}

TEST(RunFlow, Rk4IsFourthOrder) {
  const auto cert = su2_soliton();
  std::vector<double> dev;
  for (double dt : {4.0, 2.0, 1.0}) {
    FlowOptions opts;
    opts.method = Integrator::rk4;
    opts.dt = dt;
    dev.push_back(self_similarity_check(GeometryId::r_x_su2, cert, run_flow(GeometryId::r_x_su2, DMetric{{1, 4, 4, 1}}, 768.0, opts)));
  }
  for (std::size_t i = 0; i + 1 < dev.size(); ++i) {
    const double ratio = dev[i] / dev[i + 1];
    EXPECT_GT(ratio, 12.0);
    EXPECT_LT(ratio, 20.0);
  }
}

TEST(RunFlow, G00DecreasesOnCurvedSu2) {
  for (const auto& g : {DMetric{{1, 1, 2, 3}}, DMetric{{1, 4, 4, 1}}, DMetric{{3, 1, 1, 5}}}) {
    const auto traj = run_flow(GeometryId::r_x_su2, g, 20.0);
    for (std::size_t i = 1; i < traj.samples.size(); ++i) EXPECT_LT(traj.samples[i].g[0], traj.samples[i - 1].g[0]);
  }
}

TEST(RunFlow, HomothetyEquivariance) {
  const DMetric g0{{1, 1, 2, 3}};
  const double lambda = 2.5;
  const double t = 4.0;
  const auto a = run_flow(GeometryId::r_x_su2, g0, t);
  const auto b = run_flow(GeometryId::r_x_su2, g0.scaled(lambda), lambda * lambda * t);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(b.samples.back().g[i] / (lambda * a.samples.back().g[i]), 1.0, 1e-8);
}

TEST(RunFlow, Rk45MatchesRk4) {
  const DMetric g0{{1, 1, 2, 3}};
  FlowOptions rk4;
  rk4.method = Integrator::rk4;
  rk4.dt = 0.01;
  const auto a = run_flow(GeometryId::r_x_solv, g0, 1.0, rk4);
  const auto b = run_flow(GeometryId::r_x_solv, g0, 1.0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(a.samples.back().g[i], b.samples.back().g[i], 1e-8);
}

TEST(Tau, BachBranch) {
  EXPECT_EQ(tau(-2, -1.0 / 1024, 0), 1.0);
  EXPECT_NEAR(tau(-2, -1.0 / 1024, 768), 2.0, 1e-15);
  EXPECT_NEAR(tau(-2, 1.0 / 24, 5), std::sqrt(1 - 5.0 / 6), 1e-15);
}

TEST(Tau, WeightTwoIsExponential) {
  EXPECT_EQ(tau(2, 0.3, 0), 1.0);
  EXPECT_NEAR(tau(2, 0.3, 2), std::exp(-1.2), 1e-15);
}

TEST(Tau, OtherWeights) { EXPECT_NEAR(tau(0, 0.25, 1), 0.5, 1e-15); }

TEST(Tau, DomainViolation) {
  EXPECT_THROW(tau(-2, 1.0 / 24, 6), DomainError);
  EXPECT_THROW(tau(-2, 1.0 / 24, 7), DomainError);
}

TEST(SelfSimilarity, RejectsNonSoliton) {
  const auto cert = verify_soliton(GeometryId::r_x_nil, DiagonalMetric<Rational>{{1, 1, 1, 1}});
  const auto traj = run_flow(GeometryId::r_x_nil, DMetric{{1, 1, 1, 1}}, 1.0);
  EXPECT_THROW(self_similarity_check(GeometryId::r_x_nil, cert, traj), NoPotentialError);
}

TEST(Integrator, TextRoundTrip) {
  EXPECT_EQ(parse_integrator("rk4"), Integrator::rk4);
  EXPECT_EQ(parse_integrator(to_string(Integrator::rk45)), Integrator::rk45);
  EXPECT_THROW(parse_integrator("euler"), UsageError);
}
