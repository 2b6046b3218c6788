#include <gtest/gtest.h>

#include "bachflow/catalog.hpp"
#include "bachflow/errors.hpp"

using namespace bachflow;

TEST(Catalog, TagsRoundTrip) {
  for (auto id : kAllGeometries) EXPECT_EQ(parse_geometry(name(id)), id);
  EXPECT_EQ(kAllGeometries.size(), 14u);
}

TEST(Catalog, UnknownTagIsCatalogError) {
  EXPECT_THROW(parse_geometry("r_x_sol"), CatalogError);
  EXPECT_THROW(parse_geometry(""), CatalogError);
}

TEST(Catalog, EveryTagHasOneConstruction) {
  for (auto id : kAllGeometries) {
    const auto c = bracket_table(id);
    EXPECT_FALSE(c.valueless_by_exception());
  }
  EXPECT_TRUE(std::holds_alternative<FlatMarker>(bracket_table(GeometryId::r4)));
  EXPECT_TRUE(std::holds_alternative<FlatMarker>(bracket_table(GeometryId::r3_x_n1)));
  EXPECT_EQ(std::get<SurfaceProduct>(bracket_table(GeometryId::r2_x_s2)).scalar_curvature_N, 1);
  EXPECT_EQ(std::get<SurfaceProduct>(bracket_table(GeometryId::r2_x_h2)).scalar_curvature_N, -1);
  EXPECT_EQ(std::get<SurfaceProduct>(bracket_table(GeometryId::r2_x_r2)).scalar_curvature_N, 0);
  EXPECT_EQ(std::get<SurfaceProduct>(bracket_table(GeometryId::r_x_rs2)).scalar_curvature_N, 1);
  EXPECT_EQ(std::get<SurfaceProduct>(bracket_table(GeometryId::r_x_rh2)).scalar_curvature_N, -1);
}

TEST(Catalog, BracketsAreAntisymmetricAndSatisfyJacobi) {
  for (auto id : kAllGeometries) {
    const auto c = bracket_table(id);
    if (const auto* sc = std::get_if<StructureConstants>(&c)) {
      EXPECT_TRUE(sc->antisymmetric()) << name(id);
      EXPECT_TRUE(sc->satisfies_jacobi()) << name(id);
    }
  }
}

TEST(Catalog, UnimodularTraceVanishesExceptHyperbolic) {
  for (auto id : kAllGeometries) {
    const auto c = bracket_table(id);
    const auto* sc = std::get_if<StructureConstants>(&c);
    if (sc == nullptr) continue;
    if (id == GeometryId::r_x_h3) {
      EXPECT_FALSE(sc->unimodular());
      EXPECT_NE(sc->adjoint_trace(0), 0);
    } else {
      EXPECT_TRUE(sc->unimodular()) << name(id);
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(sc->adjoint_trace(j), 0);
    }
  }
}

TEST(Catalog, Su2Brackets) {
  const auto sc = std::get<StructureConstants>(bracket_table(GeometryId::r_x_su2));
  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
  EXPECT_EQ(sc(2, 0, 1), 1);
  EXPECT_EQ(sc(0, 1, 2), 1);
  EXPECT_EQ(sc(1, 2, 0), 1);
  EXPECT_EQ(sc(2, 1, 0), -1);
}

TEST(Catalog, AbelianBracketsVanish) {
  const auto sc = std::get<StructureConstants>(bracket_table(GeometryId::r_x_r3));
  EXPECT_TRUE(sc.is_abelian());
}

TEST(Catalog, NilHasOnlyOneBracket) {
  const auto sc = std::get<StructureConstants>(bracket_table(GeometryId::r_x_nil));
  int nonzero = 0;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (sc(k, i, j) != 0) ++nonzero;
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(sc(0, 1, 2), 1);
}

TEST(Catalog, HyperbolicBracketsAreBianchiV) {
  const auto sc = std::get<StructureConstants>(bracket_table(GeometryId::r_x_h3));
  EXPECT_EQ(sc(1, 0, 1), 1);
  EXPECT_EQ(sc(2, 0, 2), 1);
  EXPECT_EQ(sc(0, 1, 2), 0);
}

TEST(Catalog, MilnorParameters) {
  EXPECT_EQ(*milnor_lambda(GeometryId::r_x_su2), (std::array<Rational, 3>{1, 1, 1}));
  EXPECT_EQ(*milnor_lambda(GeometryId::r_x_sl2r), (std::array<Rational, 3>{-1, 1, 1}));
  EXPECT_EQ(*milnor_lambda(GeometryId::r_x_e2), (std::array<Rational, 3>{1, 1, 0}));
  EXPECT_EQ(*milnor_lambda(GeometryId::r_x_solv), (std::array<Rational, 3>{1, -1, 0}));
  EXPECT_EQ(*milnor_lambda(GeometryId::r_x_nil), (std::array<Rational, 3>{1, 0, 0}));
  EXPECT_FALSE(milnor_lambda(GeometryId::r_x_h3).has_value());
}

TEST(Catalog, EuclideanDimensions) {
  EXPECT_EQ(euclidean_dim(GeometryId::r4), 4);
  EXPECT_EQ(euclidean_dim(GeometryId::r3_x_n1), 3);
  EXPECT_EQ(euclidean_dim(GeometryId::r2_x_s2), 2);
  EXPECT_EQ(euclidean_dim(GeometryId::r_x_su2), 1);
  EXPECT_EQ(euclidean_dim(GeometryId::r_x_rs2), 1);
}
