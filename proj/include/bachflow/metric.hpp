#pragma once

#include <array>
#include <cstddef>

#include "bachflow/errors.hpp"
#include "bachflow/scalar.hpp"

namespace bachflow {

/// Metric coefficients on the fiber N (three frame directions).
template <Scalar T>
using FiberMetric = std::array<T, 3>;

/// Diagonal product metric g = g00 dr^2 + g11 e^1 + g22 e^2 + g33 e^3 in the
/// invariant frame. Slot 0 is always a Euclidean direction.
template <Scalar T>
struct DiagonalMetric {
  std::array<T, 4> g{};

  const T& operator[](std::size_t i) const { return g[i]; }
  T& operator[](std::size_t i) { return g[i]; }

  FiberMetric<T> fiber() const { return {g[1], g[2], g[3]}; }

  T determinant() const { return g[0] * g[1] * g[2] * g[3]; }

  DiagonalMetric scaled(const T& lambda) const {
    return {{g[0] * lambda, g[1] * lambda, g[2] * lambda, g[3] * lambda}};
  }

  bool positive() const {
    for (const auto& v : g) {
      if (!(v > 0)) return false;
    }
    return true;
  }

  friend bool operator==(const DiagonalMetric&, const DiagonalMetric&) = default;
};

template <Scalar T>
void require_positive(const DiagonalMetric<T>& g) {
  if (!g.positive()) throw DomainError("metric coefficients must be strictly positive");
}

template <Scalar T>
DiagonalMetric<T> make_metric(T g00, T g11, T g22, T g33) {
  return {{std::move(g00), std::move(g11), std::move(g22), std::move(g33)}};
}

template <Scalar T>
DiagonalMetric<double> to_double(const DiagonalMetric<T>& g) {
  if constexpr (is_exact_v<T>) {
    return {{bachflow::to_double(g[0]), bachflow::to_double(g[1]), bachflow::to_double(g[2]),
             bachflow::to_double(g[3])}};
  } else {
    return g;
  }
}

}  // namespace bachflow
