#pragma once

#include <json.hpp>

#include "bachflow/bach.hpp"
#include "bachflow/flow.hpp"
#include "bachflow/soliton.hpp"

namespace bachflow {

using Json = nlohmann::json;

// Exact scalars are written as "p/q" strings, floats as JSON numbers
// (printed with round-trip precision).

Json scalar_to_json(const Rational& v);
Json scalar_to_json(double v);
/// Accepts "p/q" strings or integers.
Rational rational_from_json(const Json& j);
double double_from_json(const Json& j);

template <Scalar T>
T scalar_from_json(const Json& j) {
  if constexpr (is_exact_v<T>) {
    return rational_from_json(j);
  } else {
    return double_from_json(j);
  }
}

template <Scalar T>
Json metric_to_json(const DiagonalMetric<T>& g) {
  Json a = Json::array();
  for (const auto& v : g.g) a.push_back(scalar_to_json(v));
  return a;
}

template <Scalar T>
DiagonalMetric<T> metric_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw UsageError("metric must be an array of 4 coefficients");
  DiagonalMetric<T> g;
  for (std::size_t i = 0; i < 4; ++i) g[i] = scalar_from_json<T>(j[i]);
  return g;
}

Json to_json(const SolitonCertificate<Rational>& cert);
Json to_json(const SolitonCertificate<double>& cert);
template <Scalar T>
SolitonCertificate<T> certificate_from_json(const Json& j);

Json to_json(const FlowTrajectory& traj);
FlowTrajectory trajectory_from_json(const Json& j);

template <Scalar T>
Json bach_to_json(GeometryId id, const DiagonalMetric<T>& g, const BachDiagonal<T>& B);

Json to_json(const ClassificationEntry& entry);

}  // namespace bachflow
