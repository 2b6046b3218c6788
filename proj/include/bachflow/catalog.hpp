#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bachflow/scalar.hpp"
#include "bachflow/structure_constants.hpp"

namespace bachflow {

/// The homogeneous product 4-manifolds handled by the engine, in report order.
enum class GeometryId {
  r4,
  r3_x_n1,
  r2_x_r2,
  r2_x_s2,
  r2_x_h2,
  r_x_r3,
  r_x_nil,
  r_x_solv,
  r_x_sl2r,
  r_x_rh2,
  r_x_rs2,
  r_x_e2,
  r_x_h3,
  r_x_su2,
};

inline constexpr std::array<GeometryId, 14> kAllGeometries = {
    GeometryId::r4,      GeometryId::r3_x_n1,  GeometryId::r2_x_r2,  GeometryId::r2_x_s2,
    GeometryId::r2_x_h2, GeometryId::r_x_r3,   GeometryId::r_x_nil,  GeometryId::r_x_solv,
    GeometryId::r_x_sl2r, GeometryId::r_x_rh2, GeometryId::r_x_rs2,  GeometryId::r_x_e2,
    GeometryId::r_x_h3,  GeometryId::r_x_su2,
};

std::string_view name(GeometryId id);
/// Human-readable manifold, e.g. "R x SU(2)".
std::string_view display_name(GeometryId id);
/// Throws CatalogError for unknown tags.
GeometryId parse_geometry(std::string_view tag);

/// R^k x N^2 (or R^{k-1} x (R x N^2)) where N^2 is a constant-curvature
/// surface. The surface factor occupies frame slots 2 and 3 and must be
/// isotropic (g22 == g33); its scalar curvature at g22 = 1 is
/// `scalar_curvature_N` and scales as 1/g22.
struct SurfaceProduct {
  Rational scalar_curvature_N;
  friend bool operator==(const SurfaceProduct&, const SurfaceProduct&) = default;
};

/// Flat R^4 or R^3 x N^1.
struct FlatMarker {
  friend bool operator==(const FlatMarker&, const FlatMarker&) = default;
};

using Construction = std::variant<StructureConstants, SurfaceProduct, FlatMarker>;

/// Bracket table (Lie-group fibers), surface parameters, or the flat marker.
Construction bracket_table(GeometryId id);

/// Dimension of the Euclidean factor the potential function lives on.
int euclidean_dim(GeometryId id);

/// Milnor parameters (l1, l2, l3) for unimodular Lie-group fibers.
std::optional<std::array<Rational, 3>> milnor_lambda(GeometryId id);

bool is_lie_group_fiber(GeometryId id);

}  // namespace bachflow
