#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace bachflow {

/// Arbitrary-precision rational. Expression templates are disabled so that
/// `auto` in generic code always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept Scalar = std::is_same_v<T, Rational> || std::is_same_v<T, double>;

/// Parses "p", "-p" or "p/q" (integers only). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

template <Scalar T>
T scalar_cast(const Rational& r) {
  if constexpr (is_exact_v<T>) {
    return r;
  } else {
    return to_double(r);
  }
}

template <Scalar T>
T ratio(long num, long den) {
  return T(num) / T(den);
}

template <Scalar T>
T abs_value(const T& v) {
  if constexpr (is_exact_v<T>) {
    return boost::multiprecision::abs(v);
  } else {
    return std::fabs(v);
  }
}

template <Scalar T>
T square(const T& v) {
  return v * v;
}

}  // namespace bachflow
