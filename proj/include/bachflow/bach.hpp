#pragma once

#include <array>
#include <cstddef>
#include <variant>

#include "bachflow/catalog.hpp"
#include "bachflow/curvature.hpp"
#include "bachflow/errors.hpp"
#include "bachflow/metric.hpp"
#include "bachflow/polynomial.hpp"

namespace bachflow {

/// Diagonal frame components B00..B33 of the Bach tensor of a product metric.
template <Scalar T>
struct BachDiagonal {
  std::array<T, 4> B{};
  const T& operator[](std::size_t i) const { return B[i]; }
  T& operator[](std::size_t i) { return B[i]; }
  friend bool operator==(const BachDiagonal&, const BachDiagonal&) = default;
};

/// b_i = B_ii / g_ii. Independent of g00.
template <Scalar T>
struct BachRatios {
  std::array<T, 4> b{};
  const T& operator[](std::size_t i) const { return b[i]; }
  T& operator[](std::size_t i) { return b[i]; }
  friend bool operator==(const BachRatios&, const BachRatios&) = default;
};

/// Bach tensor of R x N^3 split as B00 (flat direction) and the full
/// symmetric fiber block B_jk.
template <Scalar T>
struct ProductBach {
  T b00_over_g00{};
  SymmetricTensor<T> fiber;
};

/// Product formula for R x N^3 with N homogeneous (all curvature terms are
/// frame constants):
///   B00 = (-1/12 lap S - 1/4 (|Ric|^2 - S^2/3)) g00
///   Bjk = 1/2 lap Ric_jk - 1/12 lap S g_jk - 1/6 S_;jk - 2 (Ric o Ric)_jk
///         + 7/6 S Ric_jk + 3/4 |Ric|^2 g_jk - 5/12 S^2 g_jk
template <Scalar T>
ProductBach<T> product_bach_1x3(const CurvatureData<T>& d, const FiberMetric<T>& g) {
  ProductBach<T> out;
  const T& S = d.scalar;
  out.b00_over_g00 = -ratio<T>(1, 12) * d.scalar_laplacian -
                     ratio<T>(1, 4) * (d.ric_norm_sq - S * S / T(3));
  for (std::size_t j = 0; j < kFiberDim; ++j)
    for (std::size_t k = 0; k < kFiberDim; ++k) {
      const T gjk = j == k ? g[j] : T{};
      out.fiber(j, k) = ratio<T>(1, 2) * d.lap_ric(j, k) - ratio<T>(1, 12) * d.scalar_laplacian * gjk -
                        ratio<T>(1, 6) * d.scalar_hessian(j, k) - T(2) * d.ric_squared(j, k) +
                        ratio<T>(7, 6) * S * d.ricci(j, k) + ratio<T>(3, 4) * d.ric_norm_sq * gjk -
                        ratio<T>(5, 12) * S * S * gjk;
    }
  return out;
}

/// Scalar curvature of the surface factor at the given metric.
template <Scalar T>
T surface_scalar_curvature(const SurfaceProduct& sp, const DiagonalMetric<T>& g) {
  if (sp.scalar_curvature_N == 0) return T{};
  if constexpr (is_exact_v<T>) {
    if (g[2] != g[3]) throw DomainError("surface factor must be isotropic (g22 == g33)");
  } else {
    if (abs_value(g[2] - g[3]) > 1e-12 * (g[2] > g[3] ? g[2] : g[3]))
      throw DomainError("surface factor must be isotropic (g22 == g33)");
  }
  return scalar_cast<T>(sp.scalar_curvature_N) / g[2];
}

/// Product of a flat surface M (slots 0, 1) and a constant-curvature surface
/// N (slots 2, 3):
///   B_uv = 1/3 S_M;uv - 1/3 g_uv [lap S_M - 1/2 lap S_N + 1/4 (S_M^2 - S_N^2)]
///   B_ij = 1/3 S_N;ij - 1/3 g_ij [lap S_N - 1/2 lap S_M + 1/4 (S_N^2 - S_M^2)]
/// with all derivatives zero, giving B00 = S_N^2/12 g00 and B22 = -S_N^2/12 g22.
/// These are the tabulated product values and are not rederived from the
/// frame engine.
template <Scalar T>
BachDiagonal<T> bach_surface_product(const SurfaceProduct& sp, const DiagonalMetric<T>& g) {
  require_positive(g);
  const T s_n = surface_scalar_curvature(sp, g);
  const T s_m{};
  const T lap_m{};
  const T lap_n{};
  const T third = ratio<T>(1, 3);
  const T flat_factor = -third * (lap_m - ratio<T>(1, 2) * lap_n + ratio<T>(1, 4) * (s_m * s_m - s_n * s_n));
  const T surface_factor = -third * (lap_n - ratio<T>(1, 2) * lap_m + ratio<T>(1, 4) * (s_n * s_n - s_m * s_m));
  return {{flat_factor * g[0], flat_factor * g[1], surface_factor * g[2], surface_factor * g[3]}};
}

/// Route (a): Bach tensor assembled from first-principles curvature
/// (Lie-group fibers) or the surface-product formula.
template <Scalar T>
BachDiagonal<T> bach_from_curvature(GeometryId id, const DiagonalMetric<T>& g) {
  require_positive(g);
  const Construction construction = bracket_table(id);
  if (const auto* sc = std::get_if<StructureConstants>(&construction)) {
    const auto fiber = g.fiber();
    const auto pb = product_bach_1x3(curvature(*sc, fiber), fiber);
    return {{pb.b00_over_g00 * g[0], pb.fiber(0, 0), pb.fiber(1, 1), pb.fiber(2, 2)}};
  }
  if (const auto* sp = std::get_if<SurfaceProduct>(&construction)) {
    return bach_surface_product(*sp, g);
  }
  return {};
}

/// Full fiber block of the 1x3 Bach tensor (Lie-group fibers only).
template <Scalar T>
ProductBach<T> product_bach(GeometryId id, const FiberMetric<T>& fiber) {
  const Construction construction = bracket_table(id);
  const auto* sc = std::get_if<StructureConstants>(&construction);
  if (sc == nullptr) throw UnsupportedGeometry("fiber Bach block needs a Lie-group fiber");
  return product_bach_1x3(curvature(*sc, fiber), fiber);
}

template <Scalar T>
BachRatios<T> bach_ratios(const BachDiagonal<T>& B, const DiagonalMetric<T>& g) {
  require_positive(g);
  BachRatios<T> r;
  for (std::size_t i = 1; i < 4; ++i) r[i] = B[i] / g[i];
  r[0] = -(r[1] + r[2] + r[3]);
  return r;
}

/// g^ii B_ii.
template <Scalar T>
T bach_trace(const BachDiagonal<T>& B, const DiagonalMetric<T>& g) {
  return B[0] / g[0] + B[1] / g[1] + B[2] / g[2] + B[3] / g[3];
}

// --- Route (b): per-geometry closed-form polynomials -----------------------

/// Quartics for two-parameter fibers (Solv, E(2)):
///   p(x,y) = x^4 + x^3 y + x y^3 + y^4,  q(x,y) = 5x^4 + 3x^3 y - x y^3 - 3y^4.
const Polynomial& quartic_p2();
const Polynomial& quartic_q2();
/// Quartics for three-parameter fibers (SU(2), SL(2,R)).
const Polynomial& quartic_p3();
const Polynomial& quartic_q3();

struct ClosedFormPQ {
  Polynomial p;
  Polynomial q;
};

bool has_closed_form(GeometryId id);

/// The (p, q) pair a geometry's closed form is written with. Nil has no
/// quartic pair and is rejected along with every geometry lacking a closed form.
ClosedFormPQ closed_form_pq(GeometryId id);

/// Numerators N_0..N_3 in x = g11, y = g22, z = g33 such that
///   B00 = beta g00^3 N_0,   B_ii = beta g00^2 N_i g_ii,   beta = 1 / (6 det(g)^2).
std::array<Polynomial, 4> closed_form_numerators(GeometryId id);

/// beta = 1 / (6 (g00 g11 g22 g33)^2).
template <Scalar T>
T closed_form_beta(const DiagonalMetric<T>& g) {
  const T det = g.determinant();
  return T(1) / (T(6) * det * det);
}

template <Scalar T>
BachDiagonal<T> bach_closed_form(GeometryId id, const DiagonalMetric<T>& g) {
  require_positive(g);
  if (!has_closed_form(id)) throw UnsupportedGeometry(std::string("no closed form for ") + std::string(name(id)));
  const auto numerators = closed_form_numerators(id);
  const T beta = closed_form_beta(g);
  const std::array<T, 3> point{g[1], g[2], g[3]};
  const T g00_sq = g[0] * g[0];
  BachDiagonal<T> out;
  out[0] = beta * g00_sq * g[0] * numerators[0].evaluate(point);
  for (std::size_t i = 1; i < 4; ++i) out[i] = beta * g00_sq * numerators[i].evaluate(point) * g[i];
  return out;
}

/// Natural size of quadratic curvature invariants (|Ric|^2 + S^2 of the
/// curved factor); used to make float-mode zero tests scale-free.
template <Scalar T>
T curvature_scale(GeometryId id, const DiagonalMetric<T>& g) {
  const Construction construction = bracket_table(id);
  if (const auto* sc = std::get_if<StructureConstants>(&construction)) {
    const auto d = curvature(*sc, g.fiber());
    return d.ric_norm_sq + d.scalar * d.scalar;
  }
  if (const auto* sp = std::get_if<SurfaceProduct>(&construction)) {
    const T s = surface_scalar_curvature(*sp, g);
    return ratio<T>(3, 2) * s * s;
  }
  return T{};
}

}  // namespace bachflow
