#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "bachflow/scalar.hpp"

namespace bachflow {

/// Multivariate polynomial in x, y, z with exact rational coefficients.
/// Stored as exponent-vector -> coefficient; zero coefficients are never kept.
class Polynomial {
 public:
  using Exponents = std::array<int, 3>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(int index);
  static Polynomial monomial(const Rational& coeff, Exponents exps);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a) { return a * Polynomial(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned n) const;

  /// Composition: replaces x, y, z by the given polynomials.
  Polynomial substitute(const std::array<Polynomial, 3>& values) const;

  template <Scalar T>
  T evaluate(const std::array<T, 3>& point) const {
    T total{};
    for (const auto& [e, coeff] : terms_) {
      T term = scalar_cast<T>(coeff);
      for (int v = 0; v < 3; ++v)
        for (int p = 0; p < e[v]; ++p) term *= point[v];
      total += term;
    }
    return total;
  }

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  bool is_homogeneous() const;
  /// True when variable `index` appears in some term.
  bool depends_on(int index) const;

  /// k with *this == k * other, if such a nonzero rational exists.
  std::optional<Rational> proportionality(const Polynomial& other) const;

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  /// Terms in descending graded-lex order, e.g. "5*x^4 - 3*x^3*y + x*y^3".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::map<Exponents, Rational> terms_;
};

inline const Polynomial& poly_x() {
  static const Polynomial p = Polynomial::variable(0);
  return p;
}
inline const Polynomial& poly_y() {
  static const Polynomial p = Polynomial::variable(1);
  return p;
}
inline const Polynomial& poly_z() {
  static const Polynomial p = Polynomial::variable(2);
  return p;
}

}  // namespace bachflow
