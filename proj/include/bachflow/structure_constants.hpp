#pragma once

#include <array>
#include <cstddef>

#include "bachflow/frame_tensor.hpp"
#include "bachflow/scalar.hpp"

namespace bachflow {

/// Bracket coefficients c^k_ij of a 3-dimensional Lie algebra in a fixed
/// frame: [e_i, e_j] = sum_k c^k_ij e_k. Indices are 0-based (e_1 is index 0).
class StructureConstants {
 public:
  StructureConstants() = default;

  /// Milnor frame: [e2,e3] = l1 e1, [e3,e1] = l2 e2, [e1,e2] = l3 e3.
  static StructureConstants milnor(const Rational& l1, const Rational& l2, const Rational& l3);

  /// Sets [e_i, e_j] += v e_k and keeps the lower indices antisymmetric.
  void add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& v);

  const Rational& operator()(std::size_t k, std::size_t i, std::size_t j) const { return c_(k, i, j); }

  bool antisymmetric() const;
  bool satisfies_jacobi() const;

  /// sum_i c^i_ij; zero for every j exactly when the algebra is unimodular.
  Rational adjoint_trace(std::size_t j) const;
  bool unimodular() const;

  bool is_abelian() const;

  template <Scalar T>
  FrameTensor<T, 3> as() const {
    FrameTensor<T, 3> out;
    for (std::size_t k = 0; k < kFiberDim; ++k)
      for (std::size_t i = 0; i < kFiberDim; ++i)
        for (std::size_t j = 0; j < kFiberDim; ++j) out(k, i, j) = scalar_cast<T>(c_(k, i, j));
    return out;
  }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  FrameTensor<Rational, 3> c_;
};

}  // namespace bachflow
