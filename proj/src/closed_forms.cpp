#include "bachflow/bach.hpp"

#include <string>

namespace bachflow {

namespace {

const Polynomial& X() { return poly_x(); }
const Polynomial& Y() { return poly_y(); }
const Polynomial& Z() { return poly_z(); }

Polynomial at(const Polynomial& p, const Polynomial& a, const Polynomial& b, const Polynomial& c = Polynomial(0)) {
  return p.substitute({a, b, c});
}

}  // namespace

const Polynomial& quartic_p2() {
  static const Polynomial p = X().pow(4) + X().pow(3) * Y() + X() * Y().pow(3) + Y().pow(4);
  return p;
}

const Polynomial& quartic_q2() {
  static const Polynomial q = 5 * X().pow(4) + 3 * X().pow(3) * Y() - X() * Y().pow(3) - 3 * Y().pow(4);
  return q;
}

const Polynomial& quartic_p3() {
  static const Polynomial p = X().pow(4) - X().pow(3) * (Y() + Z()) + X().pow(2) * Y() * Z() +
                              X() * (-Y().pow(3) + Y().pow(2) * Z() + Y() * Z().pow(2) - Z().pow(3)) +
                              Y().pow(4) - Y().pow(3) * Z() - Y() * Z().pow(3) + Z().pow(4);
  return p;
}

const Polynomial& quartic_q3() {
  static const Polynomial q = 5 * X().pow(4) - 3 * X().pow(3) * (Y() + Z()) + X().pow(2) * Y() * Z() +
                              X() * (Y().pow(3) - Y().pow(2) * Z() - Y() * Z().pow(2) + Z().pow(3)) -
                              3 * Y().pow(4) + 3 * Y().pow(3) * Z() + 3 * Y() * Z().pow(3) -
                              3 * Z().pow(4);
  return q;
}

bool has_closed_form(GeometryId id) {
  switch (id) {
    case GeometryId::r_x_nil:
    case GeometryId::r_x_solv:
    case GeometryId::r_x_e2:
    case GeometryId::r_x_sl2r:
    case GeometryId::r_x_su2:
      return true;
    default:
      return false;
  }
}

ClosedFormPQ closed_form_pq(GeometryId id) {
  switch (id) {
    case GeometryId::r_x_solv:
    case GeometryId::r_x_e2:
      return {quartic_p2(), quartic_q2()};
    case GeometryId::r_x_sl2r:
    case GeometryId::r_x_su2:
      return {quartic_p3(), quartic_q3()};
    default:
      throw UnsupportedGeometry(std::string("no (p, q) closed form for ") + std::string(name(id)));
  }
}

std::array<Polynomial, 4> closed_form_numerators(GeometryId id) {
  const Polynomial minus_x = -X();
  switch (id) {
    case GeometryId::r_x_nil: {
      const Polynomial x4 = X().pow(4);
      return {-x4, -5 * x4, 3 * x4, 3 * x4};
    }
    case GeometryId::r_x_solv: {
      const auto& p = quartic_p2();
      const auto& q = quartic_q2();
      return {-at(p, X(), Y()), -at(q, X(), Y()), -at(q, Y(), X()), 3 * at(p, X(), Y())};
    }
    case GeometryId::r_x_e2: {
      const auto& p = quartic_p2();
      const auto& q = quartic_q2();
      return {-at(p, minus_x, Y()), -at(q, minus_x, Y()), -at(q, Y(), minus_x), 3 * at(p, minus_x, Y())};
    }
    case GeometryId::r_x_sl2r: {
      const auto& p = quartic_p3();
      const auto& q = quartic_q3();
      return {-at(p, minus_x, Y(), Z()), -at(q, minus_x, Y(), Z()), -at(q, Y(), minus_x, Z()),
              -at(q, Z(), minus_x, Y())};
    }
    case GeometryId::r_x_su2: {
      const auto& p = quartic_p3();
      const auto& q = quartic_q3();
      return {-at(p, X(), Y(), Z()), -at(q, X(), Y(), Z()), -at(q, Y(), Z(), X()), -at(q, Z(), X(), Y())};
    }
    default:
      throw UnsupportedGeometry(std::string("no closed form for ") + std::string(name(id)));
  }
}

}  // namespace bachflow
