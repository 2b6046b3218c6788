#include "bachflow/catalog.hpp"

#include <string>

#include "bachflow/errors.hpp"

namespace bachflow {

namespace {

struct Entry {
  GeometryId id;
  std::string_view tag;
  std::string_view display;
  int euclidean_dim;
};

constexpr std::array<Entry, 14> kEntries = {{
    {GeometryId::r4, "r4", "R^4", 4},
    {GeometryId::r3_x_n1, "r3_x_n1", "R^3 x N^1", 3},
    {GeometryId::r2_x_r2, "r2_x_r2", "R^2 x R^2", 2},
    {GeometryId::r2_x_s2, "r2_x_s2", "R^2 x S^2", 2},
    {GeometryId::r2_x_h2, "r2_x_h2", "R^2 x H^2", 2},
    {GeometryId::r_x_r3, "r_x_r3", "R x R^3", 1},
    {GeometryId::r_x_nil, "r_x_nil", "R x Nil", 1},
    {GeometryId::r_x_solv, "r_x_solv", "R x Solv", 1},
    {GeometryId::r_x_sl2r, "r_x_sl2r", "R x SL(2,R)~", 1},
    {GeometryId::r_x_rh2, "r_x_rh2", "R x (R x H^2)", 1},
    {GeometryId::r_x_rs2, "r_x_rs2", "R x (R x S^2)", 1},
    {GeometryId::r_x_e2, "r_x_e2", "R x E(2)", 1},
    {GeometryId::r_x_h3, "r_x_h3", "R x H^3", 1},
    {GeometryId::r_x_su2, "r_x_su2", "R x SU(2)", 1},
}};

const Entry& entry(GeometryId id) {
  for (const auto& e : kEntries)
    if (e.id == id) return e;
  throw CatalogError("geometry id outside the catalog");
}

}  // namespace

std::string_view name(GeometryId id) { return entry(id).tag; }

std::string_view display_name(GeometryId id) { return entry(id).display; }

GeometryId parse_geometry(std::string_view tag) {
  for (const auto& e : kEntries)
    if (e.tag == tag) return e.id;
  throw CatalogError("unknown geometry '" + std::string(tag) + "'");
}

int euclidean_dim(GeometryId id) { return entry(id).euclidean_dim; }

std::optional<std::array<Rational, 3>> milnor_lambda(GeometryId id) {
  switch (id) {
    case GeometryId::r_x_r3:
      return std::array<Rational, 3>{0, 0, 0};
    case GeometryId::r_x_nil:
      return std::array<Rational, 3>{1, 0, 0};
    case GeometryId::r_x_solv:
      return std::array<Rational, 3>{1, -1, 0};
    case GeometryId::r_x_e2:
      return std::array<Rational, 3>{1, 1, 0};
    // SL(2,R) carries its negative parameter on e1 so that B11 is the
    // component with the sign-flipped argument.
    case GeometryId::r_x_sl2r:
      return std::array<Rational, 3>{-1, 1, 1};
    case GeometryId::r_x_su2:
      return std::array<Rational, 3>{1, 1, 1};
    default:
      return std::nullopt;
  }
}

bool is_lie_group_fiber(GeometryId id) {
  return std::holds_alternative<StructureConstants>(bracket_table(id));
}

Construction bracket_table(GeometryId id) {
  if (auto lambda = milnor_lambda(id)) {
    const auto& l = *lambda;
    return StructureConstants::milnor(l[0], l[1], l[2]);
  }
  switch (id) {
    case GeometryId::r_x_h3: {
      // Bianchi V: [e1,e2] = e2, [e1,e3] = e3.
      StructureConstants sc;
      sc.add_bracket(0, 1, 1, 1);
      sc.add_bracket(0, 2, 2, 1);
      return sc;
    }
    case GeometryId::r4:
    case GeometryId::r3_x_n1:
      return FlatMarker{};
    case GeometryId::r2_x_r2:
      return SurfaceProduct{0};
    case GeometryId::r2_x_s2:
    case GeometryId::r_x_rs2:
      return SurfaceProduct{1};
    case GeometryId::r2_x_h2:
    case GeometryId::r_x_rh2:
      return SurfaceProduct{-1};
    default:
      break;
  }
  throw CatalogError("geometry id outside the catalog");
}

}  // namespace bachflow
