#pragma once

#include <array>
#include <cstddef>

#include "bachflow/scalar.hpp"

namespace bachflow {

inline constexpr std::size_t kFiberDim = 3;

namespace detail {
constexpr std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}
}  // namespace detail

/// Dense rank-R array of frame components on the 3-dimensional fiber.
/// Components are frame constants; index order is the order of arguments.
template <Scalar T, std::size_t Rank>
class FrameTensor {
 public:
  static constexpr std::size_t kSize = detail::ipow(kFiberDim, Rank);

  template <class... I>
    requires(sizeof...(I) == Rank)
  T& operator()(I... idx) {
    return data_[flat(static_cast<std::size_t>(idx)...)];
  }

  template <class... I>
    requires(sizeof...(I) == Rank)
  const T& operator()(I... idx) const {
    return data_[flat(static_cast<std::size_t>(idx)...)];
  }

  const std::array<T, kSize>& data() const { return data_; }

  friend bool operator==(const FrameTensor&, const FrameTensor&) = default;

 private:
  template <class... I>
  static constexpr std::size_t flat(I... idx) {
    std::size_t r = 0;
    ((r = r * kFiberDim + idx), ...);
    return r;
  }

  std::array<T, kSize> data_{};
};

}  // namespace bachflow
