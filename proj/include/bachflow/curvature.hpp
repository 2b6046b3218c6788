#pragma once

#include <array>
#include <cstddef>

#include "bachflow/frame_tensor.hpp"
#include "bachflow/metric.hpp"
#include "bachflow/scalar.hpp"
#include "bachflow/structure_constants.hpp"

// Curvature of a left-invariant diagonal metric on a 3-dimensional Lie group,
// computed entirely in the invariant frame. Every quantity is a frame
// constant, so directional derivatives of components vanish and covariant
// derivatives reduce to connection corrections.
//
// Conventions:
//   nabla_{e_i} e_j = gamma(k, i, j) e_k
//   R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y],  riemann(i,j,k,l) = g(R(e_i,e_j)e_k, e_l)
//   ricci(j,k) = sum_i g^ii riemann(i,j,k,i)        (round sphere: Ric > 0)
//   Laplacian = g^ab nabla_a nabla_b               (trace of the Hessian)

namespace bachflow {

template <Scalar T>
using Covector = std::array<T, kFiberDim>;

template <Scalar T>
using SymmetricTensor = FrameTensor<T, 2>;

template <Scalar T>
struct ConnectionCoefficients {
  FrameTensor<T, 3> gamma;
};

template <Scalar T>
struct CurvatureData {
  ConnectionCoefficients<T> connection;
  FrameTensor<T, 4> riemann;
  SymmetricTensor<T> ricci;
  T scalar{};
  /// nabla_ric(a, b, c) = (nabla_{e_a} Ric)(e_b, e_c)
  FrameTensor<T, 3> nabla_ric;
  /// (Laplacian Ric)(e_b, e_c)
  SymmetricTensor<T> lap_ric;
  /// Ric_jl g^lm Ric_mk
  SymmetricTensor<T> ric_squared;
  /// |Ric|^2 = g^ii g^jj Ric_ij^2
  T ric_norm_sq{};
  /// Frame Hessian and Laplacian of the scalar curvature.
  SymmetricTensor<T> scalar_hessian;
  T scalar_laplacian{};
};

template <Scalar T>
void require_positive(const FiberMetric<T>& g) {
  for (const auto& v : g)
    if (!(v > 0)) throw DomainError("fiber metric coefficients must be strictly positive");
}

/// Koszul formula for an invariant frame with constant metric:
/// g(nabla_i e_j, e_k) = 1/2 (g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)).
template <Scalar T>
ConnectionCoefficients<T> levi_civita(const StructureConstants& sc, const FiberMetric<T>& g) {
  require_positive(g);
  const auto c = sc.as<T>();
  const T half = ratio<T>(1, 2);
  ConnectionCoefficients<T> out;
  for (std::size_t i = 0; i < kFiberDim; ++i)
    for (std::size_t j = 0; j < kFiberDim; ++j)
      for (std::size_t k = 0; k < kFiberDim; ++k) {
        T lowered = half * (c(k, i, j) * g[k] - c(i, j, k) * g[i] + c(j, k, i) * g[j]);
        out.gamma(k, i, j) = lowered / g[k];
      }
  return out;
}

/// (nabla_{e_a} T)(e_b, e_c) for a frame-constant 2-tensor T.
template <Scalar T>
FrameTensor<T, 3> covariant_derivative(const SymmetricTensor<T>& t, const ConnectionCoefficients<T>& conn) {
  FrameTensor<T, 3> out;
  constexpr std::size_t n = kFiberDim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        T s{};
        for (std::size_t m = 0; m < n; ++m) {
          s -= conn.gamma(m, a, b) * t(m, c) + conn.gamma(m, a, c) * t(b, m);
        }
        out(a, b, c) = s;
      }
  return out;
}

/// (div T)_j = sum_i g^ii (nabla_{e_i} T)(e_i, e_j) for a frame-constant T.
template <Scalar T>
Covector<T> divergence(const SymmetricTensor<T>& t, const ConnectionCoefficients<T>& conn,
                       const FiberMetric<T>& g) {
  const auto dt = covariant_derivative(t, conn);
  Covector<T> out{};
  for (std::size_t j = 0; j < kFiberDim; ++j) {
    T s{};
    for (std::size_t i = 0; i < kFiberDim; ++i) s += dt(i, i, j) / g[i];
    out[j] = s;
  }
  return out;
}

template <Scalar T>
SymmetricTensor<T> metric_tensor(const FiberMetric<T>& g) {
  SymmetricTensor<T> out;
  for (std::size_t i = 0; i < kFiberDim; ++i) out(i, i) = g[i];
  return out;
}

template <Scalar T>
CurvatureData<T> curvature(const StructureConstants& sc, const FiberMetric<T>& g) {
  constexpr std::size_t n = kFiberDim;
  CurvatureData<T> d;
  d.connection = levi_civita(sc, g);
  const auto& G = d.connection.gamma;
  const auto c = sc.as<T>();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          T s{};
          for (std::size_t m = 0; m < n; ++m) {
            s += G(m, j, k) * G(l, i, m) - G(m, i, k) * G(l, j, m) - c(m, i, j) * G(l, m, k);
          }
          d.riemann(i, j, k, l) = s * g[l];
        }

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      T s{};
      for (std::size_t i = 0; i < n; ++i) s += d.riemann(i, j, k, i) / g[i];
      d.ricci(j, k) = s;
    }

  d.scalar = T{};
  for (std::size_t i = 0; i < n; ++i) d.scalar += d.ricci(i, i) / g[i];

  d.ric_norm_sq = T{};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      T s{};
      for (std::size_t l = 0; l < n; ++l) s += d.ricci(j, l) * d.ricci(l, k) / g[l];
      d.ric_squared(j, k) = s;
      d.ric_norm_sq += d.ricci(j, k) * d.ricci(j, k) / (g[j] * g[k]);
    }

  d.nabla_ric = covariant_derivative(d.ricci, d.connection);

  // (nabla^2 Ric)(e_a, e_b; e_c, e_d) = -sum_m [G(m,a,b) nRic(m,c,d) + G(m,a,c) nRic(b,m,d)
  //                                              + G(m,a,d) nRic(b,c,m)]
  for (std::size_t c1 = 0; c1 < n; ++c1)
    for (std::size_t c2 = 0; c2 < n; ++c2) {
      T lap{};
      for (std::size_t a = 0; a < n; ++a) {
        T s{};
        for (std::size_t m = 0; m < n; ++m) {
          s -= G(m, a, a) * d.nabla_ric(m, c1, c2) + G(m, a, c1) * d.nabla_ric(a, m, c2) +
               G(m, a, c2) * d.nabla_ric(a, c1, m);
        }
        lap += s / g[a];
      }
      d.lap_ric(c1, c2) = lap;
    }

  // S is a frame constant, so dS = 0; the Hessian keeps its connection term
  // for completeness and therefore vanishes identically.
  Covector<T> ds{};
  d.scalar_laplacian = T{};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      T s{};
      for (std::size_t m = 0; m < n; ++m) s -= G(m, a, b) * ds[m];
      d.scalar_hessian(a, b) = s;
    }
  for (std::size_t a = 0; a < n; ++a) d.scalar_laplacian += d.scalar_hessian(a, a) / g[a];
  return d;
}

}  // namespace bachflow
