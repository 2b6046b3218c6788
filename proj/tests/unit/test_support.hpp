#pragma once

#include <random>
#include <vector>

#include "bachflow/catalog.hpp"
#include "bachflow/metric.hpp"
#include "bachflow/scalar.hpp"

namespace bachflow::testing {

inline Rational random_positive_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 12) {
  std::uniform_int_distribution<long> num(1, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline DiagonalMetric<Rational> random_metric(std::mt19937_64& rng) {
  return {{random_positive_rational(rng), random_positive_rational(rng), random_positive_rational(rng),
           random_positive_rational(rng)}};
}

/// Random metric with g22 == g33 (surface factors must be isotropic).
inline DiagonalMetric<Rational> random_isotropic_metric(std::mt19937_64& rng) {
  auto g = random_metric(rng);
  g[3] = g[2];
  return g;
}

inline const std::vector<GeometryId>& lie_group_geometries() {
  static const std::vector<GeometryId> ids = {GeometryId::r_x_r3,  GeometryId::r_x_nil, GeometryId::r_x_solv,
                                              GeometryId::r_x_e2,  GeometryId::r_x_sl2r, GeometryId::r_x_su2,
                                              GeometryId::r_x_h3};
  return ids;
}

inline const std::vector<GeometryId>& closed_form_geometries() {
  static const std::vector<GeometryId> ids = {GeometryId::r_x_nil, GeometryId::r_x_solv, GeometryId::r_x_e2,
                                              GeometryId::r_x_sl2r, GeometryId::r_x_su2};
  return ids;
}

}  // namespace bachflow::testing
