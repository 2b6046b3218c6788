#include "bachflow/structure_constants.hpp"

namespace bachflow {

StructureConstants StructureConstants::milnor(const Rational& l1, const Rational& l2,
                                              const Rational& l3) {
  StructureConstants sc;
  sc.add_bracket(1, 2, 0, l1);
  sc.add_bracket(2, 0, 1, l2);
  sc.add_bracket(0, 1, 2, l3);
  return sc;
}

void StructureConstants::add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  c_(k, i, j) += v;
  c_(k, j, i) -= v;
}

bool StructureConstants::antisymmetric() const {
  for (std::size_t k = 0; k < kFiberDim; ++k)
    for (std::size_t i = 0; i < kFiberDim; ++i)
      for (std::size_t j = 0; j < kFiberDim; ++j)
        if (c_(k, i, j) != -c_(k, j, i)) return false;
  return true;
}

bool StructureConstants::satisfies_jacobi() const {
  constexpr std::size_t n = kFiberDim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational s = 0;
          for (std::size_t m = 0; m < n; ++m) {
            s += c_(m, i, j) * c_(l, m, k) + c_(m, j, k) * c_(l, m, i) + c_(m, k, i) * c_(l, m, j);
          }
          if (s != 0) return false;
        }
  return true;
}

Rational StructureConstants::adjoint_trace(std::size_t j) const {
  Rational s = 0;
  for (std::size_t i = 0; i < kFiberDim; ++i) s += c_(i, i, j);
  return s;
}

bool StructureConstants::unimodular() const {
  for (std::size_t j = 0; j < kFiberDim; ++j)
    if (adjoint_trace(j) != 0) return false;
  return true;
}

bool StructureConstants::is_abelian() const {
  for (const auto& v : c_.data())
    if (v != 0) return false;
  return true;
}

}  // namespace bachflow
