#include <gtest/gtest.h>

#include "bachflow/bach.hpp"
#include "test_support.hpp"

using namespace bachflow;
using bachflow::testing::closed_form_geometries;
using bachflow::testing::random_isotropic_metric;
using bachflow::testing::random_metric;
using bachflow::testing::random_positive_rational;

namespace {
using RMetric = DiagonalMetric<Rational>;
using RBach = BachDiagonal<Rational>;
}  // namespace

TEST(BachFromCurvature, SphereProductUnit) {
  EXPECT_EQ(bach_from_curvature(GeometryId::r2_x_s2, RMetric{{1, 1, 1, 1}}),
            (RBach{{Rational(1, 12), Rational(1, 12), Rational(-1, 12), Rational(-1, 12)}}));
}

TEST(BachFromCurvature, HyperbolicSurfaceProductUnit) {
  EXPECT_EQ(bach_from_curvature(GeometryId::r2_x_h2, RMetric{{1, 1, 1, 1}}),
            (RBach{{Rational(1, 12), Rational(1, 12), Rational(-1, 12), Rational(-1, 12)}}));
}

TEST(BachFromCurvature, RoundSu2IsBachFlat) {
  EXPECT_EQ(bach_from_curvature(GeometryId::r_x_su2, RMetric{{1, 1, 1, 1}}), RBach{});
}

TEST(BachFromCurvature, NilUnit) {
  EXPECT_EQ(bach_from_curvature(GeometryId::r_x_nil, RMetric{{1, 1, 1, 1}}),
            (RBach{{Rational(-1, 6), Rational(-5, 6), Rational(1, 2), Rational(1, 2)}}));
}

TEST(BachFromCurvature, FlatGeometriesVanish) {
  std::mt19937_64 rng(11);
  for (auto id : {GeometryId::r4, GeometryId::r3_x_n1, GeometryId::r_x_r3}) {
    EXPECT_EQ(bach_from_curvature(id, random_metric(rng)), RBach{});
  }
  EXPECT_EQ(bach_from_curvature(GeometryId::r2_x_r2, random_metric(rng)), RBach{});
}

TEST(BachFromCurvature, HyperbolicFiberIsBachFlat) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 25; ++trial)
    EXPECT_EQ(bach_from_curvature(GeometryId::r_x_h3, random_metric(rng)), RBach{});
}

TEST(BachFromCurvature, SurfaceFactorMustBeIsotropic) {
  EXPECT_THROW(bach_from_curvature(GeometryId::r2_x_s2, RMetric{{1, 1, 1, 2}}), DomainError);
  EXPECT_THROW(bach_from_curvature(GeometryId::r2_x_s2, DiagonalMetric<double>{{1, 1, 1, 1.001}}), DomainError);
}

TEST(BachFromCurvature, NonPositiveMetricIsDomainError) {
  EXPECT_THROW(bach_from_curvature(GeometryId::r_x_su2, RMetric{{0, 1, 1, 1}}), DomainError);
}

TEST(BachClosedForm, Su2QuarterMetric) {
  const RMetric g{{1, 1, 1, Rational(1, 4)}};
  EXPECT_EQ(closed_form_beta(g), Rational(8, 3));
  const auto b = bach_ratios(bach_closed_form(GeometryId::r_x_su2, g), g);
  EXPECT_EQ(b[1], Rational(1, 32));
  EXPECT_EQ(b[2], Rational(1, 32));
  EXPECT_EQ(b[3], Rational(1, 32));
  EXPECT_EQ(b[0], Rational(-3, 32));
}

TEST(BachClosedForm, E2DiagonalIsFlat) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_metric(rng);
    g[2] = g[1];
    EXPECT_EQ(bach_closed_form(GeometryId::r_x_e2, g), RBach{});
  }
}

TEST(BachClosedForm, SolvThirdComponent) {
  const RMetric g{{1, 1, 2, 3}};
  const Rational beta = closed_form_beta(g);
  EXPECT_EQ(quartic_p2().evaluate(std::array<Rational, 3>{1, 2, 0}), 27);
  const auto B = bach_closed_form(GeometryId::r_x_solv, g);
  EXPECT_EQ(B[3] / g[3], 3 * beta * 27);
  EXPECT_EQ(B[3] / g[3], Rational(3, 8));
}

TEST(BachClosedForm, NilFifthPower) {
  const RMetric g{{2, 3, 5, 7}};
  const Rational beta = closed_form_beta(g);
  const auto B = bach_closed_form(GeometryId::r_x_nil, g);
  EXPECT_EQ(B[1], -5 * beta * 4 * 243);
  EXPECT_EQ(B[0], -beta * 8 * 81);
}

TEST(BachClosedForm, UnsupportedGeometries) {
  for (auto id : {GeometryId::r4, GeometryId::r2_x_s2, GeometryId::r_x_h3, GeometryId::r_x_r3, GeometryId::r_x_rs2})
    EXPECT_THROW(bach_closed_form(id, RMetric{{1, 1, 1, 1}}), UnsupportedGeometry);
  EXPECT_THROW(closed_form_pq(GeometryId::r_x_nil), UnsupportedGeometry);
}

TEST(ClosedFormPQ, QuarticsMatchDisplayedForms) {
  const auto& x = poly_x();
  const auto& y = poly_y();
  const auto& z = poly_z();
  EXPECT_EQ(closed_form_pq(GeometryId::r_x_solv).p, x.pow(4) + x.pow(3) * y + x * y.pow(3) + y.pow(4));
  EXPECT_EQ(closed_form_pq(GeometryId::r_x_e2).q, 5 * x.pow(4) + 3 * x.pow(3) * y - x * y.pow(3) - 3 * y.pow(4));
  const auto su2 = closed_form_pq(GeometryId::r_x_su2);
  EXPECT_EQ(su2.q.to_string(),
            "5*x^4 - 3*x^3*y - 3*x^3*z + x^2*y*z + x*y^3 - x*y^2*z - x*y*z^2 + x*z^3 - 3*y^4 + 3*y^3*z + 3*y*z^3 - "
            "3*z^4");
  EXPECT_EQ(su2.p.to_string(),
            "x^4 - x^3*y - x^3*z + x^2*y*z - x*y^3 + x*y^2*z + x*y*z^2 - x*z^3 + y^4 - y^3*z - y*z^3 + z^4");
  EXPECT_EQ(closed_form_pq(GeometryId::r_x_sl2r).p, su2.p);
  for (auto id : closed_form_geometries())
    for (const auto& n : closed_form_numerators(id)) EXPECT_TRUE(n.is_homogeneous() && n.total_degree() == 4);
  (void)z;
}

// Route (a) and route (b) are independent; any disagreement is a defect.
TEST(BachOracle, CurvatureRouteEqualsClosedForms) {
  std::mt19937_64 rng(14);
  for (auto id : closed_form_geometries()) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto g = random_metric(rng);
      ASSERT_EQ(bach_from_curvature(id, g), bach_closed_form(id, g)) << name(id);
    }
  }
}

TEST(BachProperties, TraceFree) {
  std::mt19937_64 rng(15);
  for (auto id : kAllGeometries) {
    for (int trial = 0; trial < 10; ++trial) {
      const bool surface = std::holds_alternative<SurfaceProduct>(bracket_table(id));
      const auto g = surface ? random_isotropic_metric(rng) : random_metric(rng);
      EXPECT_EQ(bach_trace(bach_from_curvature(id, g), g), 0) << name(id);
    }
  }
}

TEST(BachProperties, FiberBlockIsDiagonalAndDivergenceFree) {
  std::mt19937_64 rng(16);
  for (auto id : bachflow::testing::lie_group_geometries()) {
    const auto sc = std::get<StructureConstants>(bracket_table(id));
    for (int trial = 0; trial < 10; ++trial) {
      const auto g = random_metric(rng).fiber();
      const auto pb = product_bach(id, g);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) EXPECT_EQ(pb.fiber(i, j), 0) << name(id);
      for (const auto& v : divergence(pb.fiber, levi_civita(sc, g), g)) EXPECT_EQ(v, 0) << name(id);
    }
  }
}

TEST(BachProperties, NilUnitIsDivergenceFree) {
  const FiberMetric<Rational> g{1, 1, 1};
  const auto sc = std::get<StructureConstants>(bracket_table(GeometryId::r_x_nil));
  for (const auto& v : divergence(product_bach(GeometryId::r_x_nil, g).fiber, levi_civita(sc, g), g)) EXPECT_EQ(v, 0);
}

TEST(BachProperties, ConformalWeightMinusTwo) {
  std::mt19937_64 rng(17);
  for (auto id : kAllGeometries) {
    const bool surface = std::holds_alternative<SurfaceProduct>(bracket_table(id));
    for (int trial = 0; trial < 5; ++trial) {
      const auto g = surface ? random_isotropic_metric(rng) : random_metric(rng);
      const Rational lambda = random_positive_rational(rng);
      const auto a = bach_from_curvature(id, g);
      const auto b = bach_from_curvature(id, g.scaled(lambda));
      for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(b[i], a[i] / lambda) << name(id);
    }
  }
}

TEST(BachProperties, RatiosIndependentOfG00) {
  std::mt19937_64 rng(18);
  for (auto id : kAllGeometries) {
    const bool surface = std::holds_alternative<SurfaceProduct>(bracket_table(id));
    for (int trial = 0; trial < 5; ++trial) {
      auto g = surface ? random_isotropic_metric(rng) : random_metric(rng);
      auto unit = g;
      unit[0] = 1;
      EXPECT_EQ(bach_ratios(bach_from_curvature(id, g), g), bach_ratios(bach_from_curvature(id, unit), unit))
          << name(id);
    }
  }
}

TEST(BachRatios, ZeroAndSphereProduct) {
  const RMetric g{{1, 1, 1, 1}};
  EXPECT_EQ(bach_ratios(RBach{}, g), BachRatios<Rational>{});
  const auto b = bach_ratios(bach_from_curvature(GeometryId::r2_x_s2, g), g);
  EXPECT_EQ(b, (BachRatios<Rational>{{Rational(1, 12), Rational(1, 12), Rational(-1, 12), Rational(-1, 12)}}));
}

TEST(BachFloat, AgreesWithExact) {
  std::mt19937_64 rng(19);
  for (auto id : closed_form_geometries()) {
    const auto g = random_metric(rng);
    const auto exact = bach_from_curvature(id, g);
    const auto approx = bach_from_curvature(id, to_double(g));
    const double scale = to_double(curvature_scale(id, g));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(approx[i], to_double(exact[i]), 1e-12 * (1 + scale) * to_double(g[i]));
  }
}
