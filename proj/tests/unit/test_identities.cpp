#include <gtest/gtest.h>

#include "bachflow/bach.hpp"
#include "bachflow/identities.hpp"

using namespace bachflow;

namespace {
const Polynomial& x = poly_x();
const Polynomial& y = poly_y();

Polynomial sub(const Polynomial& p, const Polynomial& a, const Polynomial& b) { return p.substitute({a, b, Polynomial(0)}); }

const PolynomialIdentity& find(const std::string& name) {
  for (const auto& i : identity_registry())
    if (i.name == name) return i;
  throw std::out_of_range(name);
}
}  // namespace

TEST(Identities, EveryRegisteredIdentityHolds) {
  for (const auto& identity : identity_registry()) {
    const auto c = check(identity);
    EXPECT_TRUE(c.holds) << identity.name << ": " << identity.statement;
    if (!identity.rhs.is_zero()) {
      ASSERT_TRUE(c.observed_factor.has_value()) << identity.name;
      EXPECT_EQ(*c.observed_factor, identity.factor) << identity.name;
    }
  }
}

TEST(Identities, ProportionalityFactorsArePinned) {
  EXPECT_EQ(find("e2_12").factor, 4);
  EXPECT_EQ(find("su2_cubic_difference").factor, -1);
  EXPECT_EQ(find("solv_13").factor, 1);
  EXPECT_EQ(find("sl2r_23").factor, 1);
}

TEST(Identities, EveryClosedFormGeometryExceptNilHasIdentities) {
  EXPECT_FALSE(identities_for(GeometryId::r_x_e2).empty());
  EXPECT_FALSE(identities_for(GeometryId::r_x_solv).empty());
  EXPECT_FALSE(identities_for(GeometryId::r_x_sl2r).empty());
  EXPECT_FALSE(identities_for(GeometryId::r_x_su2).empty());
  EXPECT_TRUE(identities_for(GeometryId::r_x_nil).empty());
}

TEST(Identities, Su2QuarterValue) {
  const Polynomial q = quartic_q3().substitute({x, x, Polynomial(Rational(1, 4)) * x});
  EXPECT_EQ(q, Polynomial(Rational(-3, 256)) * x.pow(4));
}

TEST(Identities, BrokenCheckIsDetected) {
  PolynomialIdentity wrong = find("e2_12");
  wrong.factor = 1;
  EXPECT_FALSE(check(wrong).holds);
  EXPECT_EQ(*check(wrong).observed_factor, 4);
}

// Variants with a single altered coefficient are not identities; the
// registered forms above are the ones that expand correctly.
TEST(Identities, SolvVariantWithSixIsNotAnIdentity) {
  const Polynomial lhs = -sub(quartic_q2(), x, y) - 3 * sub(quartic_p2(), x, y);
  const Polynomial variant = -2 * x * (4 * x.pow(3) + 6 * x.pow(2) * y + y.pow(3));
  EXPECT_FALSE(lhs.proportionality(variant).has_value());
}

TEST(Identities, E2VariantWithTwoXCubedIsNotAnIdentity) {
  const Polynomial lhs = -sub(quartic_q2(), y, -x) - 3 * sub(quartic_p2(), -x, y);
  const Polynomial variant = -2 * y * (4 * y.pow(3) - 3 * x * y.pow(2) - 2 * x.pow(3));
  EXPECT_FALSE(lhs.proportionality(variant).has_value());
}

TEST(Identities, E2FlatVariantWithThreeYCubedIsNotAnIdentity) {
  const Polynomial lhs = sub(quartic_q2(), y, -x);
  const Polynomial variant = (y - x) * (3 * x.pow(3) + 2 * x.pow(2) * y + 2 * x * y.pow(2) + 3 * y.pow(3));
  EXPECT_FALSE(lhs.proportionality(variant).has_value());
}

TEST(Identities, Sl2rDiagonalHasNoPositiveRoot) {
  // 2x^2 (x+y)(4x+y) > 0 for x, y > 0
  const auto& id = find("sl2r_12_diagonal");
  EXPECT_TRUE(check(id).holds);
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) EXPECT_GT(id.rhs.evaluate(std::array<Rational, 3>{a, b, 0}), 0);
}
