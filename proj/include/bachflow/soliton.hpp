#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bachflow/bach.hpp"
#include "bachflow/catalog.hpp"
#include "bachflow/errors.hpp"
#include "bachflow/identities.hpp"
#include "bachflow/metric.hpp"

namespace bachflow {

/// `gaussian` only labels the flat R^4 family, where every c is allowed; it is
/// never a verify_soliton verdict.
enum class SolitonType { steady, shrinking, expanding, none, gaussian };

std::string_view to_string(SolitonType t);
/// Throws UsageError on unknown text.
SolitonType parse_soliton_type(std::string_view text);

/// Quadratic part of f on the Euclidean factor, in coordinates where the
/// flat metric is the identity: f = sum_i quadratic[i] x_i^2 + linear + const.
/// The linear and constant terms are free.
template <Scalar T>
struct Potential {
  std::vector<T> quadratic;
  friend bool operator==(const Potential&, const Potential&) = default;
};

template <Scalar T>
struct SolitonCertificate {
  GeometryId geometry = GeometryId::r_x_r3;
  /// Input metric with g00 replaced by 1; the fiber coefficients are kept.
  /// The ratios b_i do not depend on g00, so nothing is lost.
  DiagonalMetric<T> metric;
  SolitonType verdict = SolitonType::none;
  T c{};
  /// max over curved-factor slots of |b_i + 2c|
  T residual{};
  BachRatios<T> ratios;
  Potential<T> potential;
  bool bach_flat = false;
  friend bool operator==(const SolitonCertificate&, const SolitonCertificate&) = default;
};

/// Float-mode zero threshold for quantities with the units of b_i.
template <Scalar T>
T soliton_tolerance(GeometryId id, const DiagonalMetric<T>& g, const BachRatios<T>& b) {
  if constexpr (is_exact_v<T>) {
    return T{};
  } else {
    T scale = curvature_scale(id, g);
    for (const auto& v : b.b) scale = std::max(scale, std::fabs(v));
    return 1e-12 * scale;
  }
}

/// Gradient soliton test for R^k x N with f depending on the R^k factor only:
/// Hess f = c g + 1/2 B forces b_i = -2c on every curved slot, and leaves
/// f_ii = c + b_i / 2 on the flat slots.
template <Scalar T>
SolitonCertificate<T> verify_soliton(GeometryId id, const DiagonalMetric<T>& g_in) {
  require_positive(g_in);
  const int k = euclidean_dim(id);
  if (k >= 4) throw UnsupportedGeometry("flat R^4 has no curved factor; the soliton constant is unconstrained");

  SolitonCertificate<T> cert;
  cert.geometry = id;
  cert.metric = g_in;
  cert.metric[0] = T(1);
  const DiagonalMetric<T>& g = cert.metric;

  cert.ratios = bach_ratios(bach_from_curvature(id, g), g);
  const auto& b = cert.ratios;

  T sum{};
  for (int i = k; i < 4; ++i) sum += b[static_cast<std::size_t>(i)];
  cert.c = -sum / (T(2) * T(4 - k));

  cert.residual = T{};
  for (int i = k; i < 4; ++i) {
    const T dev = abs_value(b[static_cast<std::size_t>(i)] + T(2) * cert.c);
    if (dev > cert.residual) cert.residual = dev;
  }

  const T tol = soliton_tolerance(id, g, b);
  T max_b{};
  for (const auto& v : b.b) max_b = std::max(max_b, abs_value(v));
  cert.bach_flat = max_b <= tol;

  if (cert.residual > tol) {
    cert.verdict = SolitonType::none;
  } else if (abs_value(cert.c) <= tol) {
    cert.verdict = SolitonType::steady;
  } else {
    cert.verdict = cert.c > 0 ? SolitonType::shrinking : SolitonType::expanding;
  }

  if (cert.verdict != SolitonType::none) {
    for (int i = 0; i < k; ++i)
      cert.potential.quadratic.push_back((cert.c + b[static_cast<std::size_t>(i)] / T(2)) / T(2));
  }
  return cert;
}

template <Scalar T>
Potential<T> potential_function(const SolitonCertificate<T>& cert) {
  if (cert.verdict == SolitonType::none) throw NoPotentialError("metric is not a gradient Bach soliton");
  return cert.potential;
}

/// Human-readable potential, e.g. "f(r) = -1/512 r^2 + a r + b".
std::string potential_text(const Potential<Rational>& p);
std::string potential_text(const Potential<double>& p);

/// 4x4 Ricci tensor of the product metric in the frame (diagonal blocks).
template <Scalar T>
std::array<std::array<T, 4>, 4> product_ricci(GeometryId id, const DiagonalMetric<T>& g) {
  std::array<std::array<T, 4>, 4> ric{};
  const Construction construction = bracket_table(id);
  if (const auto* sc = std::get_if<StructureConstants>(&construction)) {
    const auto d = curvature(*sc, g.fiber());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) ric[i + 1][j + 1] = d.ricci(i, j);
  } else if (const auto* sp = std::get_if<SurfaceProduct>(&construction)) {
    const T s = surface_scalar_curvature(*sp, g);
    ric[2][2] = s / T(2) * g[2];
    ric[3][3] = s / T(2) * g[3];
  }
  return ric;
}

/// max_j |Ric(grad f)_j| at the sample point x_i = 1 with unit linear
/// coefficients. grad f has components only along the flat factor.
template <Scalar T>
T ricci_gradient_check(const SolitonCertificate<T>& cert) {
  const Potential<T> f = potential_function(cert);
  const auto ric = product_ricci(cert.geometry, cert.metric);
  std::array<T, 4> grad{};
  for (std::size_t i = 0; i < f.quadratic.size(); ++i) grad[i] = (T(2) * f.quadratic[i] + T(1)) / cert.metric[i];
  T worst{};
  for (std::size_t j = 0; j < 4; ++j) {
    T v{};
    for (std::size_t i = 0; i < 4; ++i) v += ric[j][i] * grad[i];
    worst = std::max(worst, abs_value(v));
  }
  return worst;
}

// --- Classification ---------------------------------------------------------

/// Predicted soliton type of g from the exact family description; nullopt
/// when g lies in no family.
std::optional<SolitonType> in_family(GeometryId id, const DiagonalMetric<Rational>& g);

struct FamilyWitness {
  DiagonalMetric<Rational> metric;
  /// Empty for R^4, where only B == 0 is checked.
  std::optional<SolitonCertificate<Rational>> certificate;
  /// certificate verdict equals the expected one
  bool agrees = false;
};

struct SolitonFamily {
  std::string label;
  SolitonType type = SolitonType::none;
  std::string constant;
  std::string potential;
  std::vector<FamilyWitness> witnesses;
};

/// Bounded search for further solutions of b1 = b2 = b3 in the normalized
/// ratio variables, over [1/8, 8]^dimension.
struct RootScan {
  bool performed = false;
  int dimension = 0;
  std::string variables;
  std::size_t grid_cells = 0;
  std::size_t surviving_cells = 0;
  std::vector<std::vector<double>> roots;
  std::size_t matched = 0;
  std::size_t unmatched = 0;
  bool ok = true;
};

struct ClassificationEntry {
  GeometryId geometry = GeometryId::r_x_r3;
  std::vector<SolitonFamily> families;
  /// Metrics outside every family, each expected to give verdict none.
  std::vector<FamilyWitness> off_family;
  RootScan scan;
  std::vector<IdentityCheck> identities;
  std::string note;
  bool ok = false;
};

ClassificationEntry classify(GeometryId id);

/// All catalog geometries, fanned out over thread_budget() workers, in catalog order.
std::vector<ClassificationEntry> classify_all();

}  // namespace bachflow
