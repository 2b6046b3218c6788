#include "bachflow/identities.hpp"

#include "bachflow/bach.hpp"

namespace bachflow {

namespace {

Polynomial sub(const Polynomial& p, const Polynomial& a, const Polynomial& b, const Polynomial& c = Polynomial(0)) {
  return p.substitute({a, b, c});
}

std::vector<PolynomialIdentity> build_registry() {
  const Polynomial& x = poly_x();
  const Polynomial& y = poly_y();
  const Polynomial& z = poly_z();
  const Polynomial mx = -x;
  const auto& p2 = quartic_p2();
  const auto& q2 = quartic_q2();
  const auto& p3 = quartic_p3();
  const auto& q3 = quartic_q3();

  std::vector<PolynomialIdentity> r;

  // R x E(2): ratio differences with y normalized.
  r.push_back({"e2_12", GeometryId::r_x_e2, "q(-x,y) - q(y,-x) = 4 (x-y)(x+y)(2x^2-xy+2y^2)",
               sub(q2, mx, y) - sub(q2, y, mx), (x - y) * (x + y) * (2 * x.pow(2) - x * y + 2 * y.pow(2)), 4});
  r.push_back({"e2_13", GeometryId::r_x_e2, "-q(-x,y) - 3p(-x,y) = -2x(4x^3 - 3x^2 y - y^3)",
               -sub(q2, mx, y) - 3 * sub(p2, mx, y), -2 * x * (4 * x.pow(3) - 3 * x.pow(2) * y - y.pow(3)), 1});
  r.push_back({"e2_23", GeometryId::r_x_e2, "-q(y,-x) - 3p(-x,y) = -2y(4y^3 - 3xy^2 - x^3)",
               -sub(q2, y, mx) - 3 * sub(p2, mx, y), -2 * y * (4 * y.pow(3) - 3 * x * y.pow(2) - x.pow(3)), 1});
  r.push_back({"e2_flat_p", GeometryId::r_x_e2, "p(-x,y) = (x-y)^2 (x^2+xy+y^2)", sub(p2, mx, y),
               (x - y).pow(2) * (x.pow(2) + x * y + y.pow(2)), 1});
  r.push_back({"e2_flat_q11", GeometryId::r_x_e2, "q(-x,y) = (x-y)(5x^3+2x^2 y+2xy^2+3y^3)", sub(q2, mx, y),
               (x - y) * (5 * x.pow(3) + 2 * x.pow(2) * y + 2 * x * y.pow(2) + 3 * y.pow(3)), 1});
  r.push_back({"e2_flat_q22", GeometryId::r_x_e2, "q(y,-x) = (y-x)(3x^3+2x^2 y+2xy^2+5y^3)", sub(q2, y, mx),
               (y - x) * (3 * x.pow(3) + 2 * x.pow(2) * y + 2 * x * y.pow(2) + 5 * y.pow(3)), 1});

  // R x Solv.
  r.push_back({"solv_13", GeometryId::r_x_solv, "-q(x,y) - 3p(x,y) = -2x(4x^3 + 3x^2 y + y^3)",
               -sub(q2, x, y) - 3 * sub(p2, x, y), -2 * x * (4 * x.pow(3) + 3 * x.pow(2) * y + y.pow(3)), 1});

  // R x SL(2,R).
  const Polynomial sl_12 = 8 * x.pow(4) + 4 * x.pow(3) * y + 6 * x.pow(3) * z + 2 * x.pow(2) * y * z -
                           4 * x * y.pow(3) + 2 * x * y.pow(2) * z + 2 * x * z.pow(3) - 8 * y.pow(4) +
                           6 * y.pow(3) * z + 2 * y * z.pow(3);
  r.push_back({"sl2r_12", GeometryId::r_x_sl2r, "q(-x,y,z) - q(y,-x,z) expanded",
               sub(q3, mx, y, z) - sub(q3, y, mx, z), sl_12, 1});
  r.push_back({"sl2r_12_diagonal", GeometryId::r_x_sl2r, "sl2r_12 at y = z: 2x^2 (x+y)(4x+y)", sub(sl_12, x, y, y),
               2 * x.pow(2) * (x + y) * (4 * x + y), 1});
  r.push_back({"sl2r_23", GeometryId::r_x_sl2r,
               "q(y,-x,z) - q(z,-x,y) = 2(y-z)(x^3+3xy^2+2xyz+3xz^2+4y^3+2y^2 z+2yz^2+4z^3)",
               sub(q3, y, mx, z) - sub(q3, z, mx, y),
               2 * (y - z) *
                   (x.pow(3) + 3 * x * y.pow(2) + 2 * x * y * z + 3 * x * z.pow(2) + 4 * y.pow(3) +
                    2 * y.pow(2) * z + 2 * y * z.pow(2) + 4 * z.pow(3)),
               1});

  // R x SU(2).
  const Polynomial f12 = 4 * x.pow(3) + 2 * x.pow(2) * y - 3 * x.pow(2) * z + 2 * x * y.pow(2) - 2 * x * y * z +
                         4 * y.pow(3) - 3 * y.pow(2) * z - z.pow(3);
  const Polynomial f13 = 4 * x.pow(3) - 3 * x.pow(2) * y + 2 * x.pow(2) * z - 2 * x * y * z + 2 * x * z.pow(2) -
                         y.pow(3) - 3 * y * z.pow(2) + 4 * z.pow(3);
  r.push_back({"su2_12", GeometryId::r_x_su2, "q(x,y,z) - q(y,z,x) = 2(x-y) F12", sub(q3, x, y, z) - sub(q3, y, z, x),
               2 * (x - y) * f12, 1});
  r.push_back({"su2_13", GeometryId::r_x_su2, "q(x,y,z) - q(z,x,y) = 2(x-z) F13", sub(q3, x, y, z) - sub(q3, z, x, y),
               2 * (x - z) * f13, 1});
  r.push_back({"su2_23", GeometryId::r_x_su2,
               "q(y,z,x) - q(z,x,y) = -2(y-z)(x^3+3xy^2+2xyz+3xz^2-4y^3-2y^2 z-2yz^2-4z^3)",
               sub(q3, y, z, x) - sub(q3, z, x, y),
               -2 * (y - z) *
                   (x.pow(3) + 3 * x * y.pow(2) + 2 * x * y * z + 3 * x * z.pow(2) - 4 * y.pow(3) -
                    2 * y.pow(2) * z - 2 * y * z.pow(2) - 4 * z.pow(3)),
               1});
  r.push_back({"su2_cubic_difference", GeometryId::r_x_su2, "F13 - F12 = -(y-z)(5x^2+2xy+2xz+5y^2+2yz+5z^2)",
               f13 - f12, (y - z) * (5 * x.pow(2) + 2 * x * y + 2 * x * z + 5 * y.pow(2) + 2 * y * z + 5 * z.pow(2)),
               -1});
  r.push_back({"su2_round_p", GeometryId::r_x_su2, "p(x,x,x) = 0", sub(p3, x, x, x), Polynomial(0), 1});
  r.push_back({"su2_round_q", GeometryId::r_x_su2, "q(x,x,x) = 0", sub(q3, x, x, x), Polynomial(0), 1});
  const Polynomial quarter_x = Polynomial(Rational(1, 4)) * x;
  r.push_back({"su2_quarter_q", GeometryId::r_x_su2, "q(x,x,x/4) = -3/256 x^4", sub(q3, x, x, quarter_x),
               Polynomial(Rational(-3, 256)) * x.pow(4), 1});
  return r;
}

}  // namespace

const std::vector<PolynomialIdentity>& identity_registry() {
  static const std::vector<PolynomialIdentity> registry = build_registry();
  return registry;
}

std::vector<PolynomialIdentity> identities_for(GeometryId id) {
  std::vector<PolynomialIdentity> out;
  for (const auto& identity : identity_registry())
    if (identity.geometry == id) out.push_back(identity);
  return out;
}

IdentityCheck check(const PolynomialIdentity& identity) {
  IdentityCheck out;
  out.name = identity.name;
  out.expected_factor = identity.factor;
  out.holds = identity.lhs == Polynomial(identity.factor) * identity.rhs;
  if (!identity.rhs.is_zero()) out.observed_factor = identity.lhs.proportionality(identity.rhs);
  return out;
}

}  // namespace bachflow
