#include "bachflow/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bachflow {

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Rational& constant) { add_term({0, 0, 0}, constant); }

Polynomial Polynomial::variable(int index) {
  if (index < 0 || index > 2) throw std::out_of_range("polynomial variable index");
  Exponents e{0, 0, 0};
  e[index] = 1;
  return monomial(1, e);
}

Polynomial Polynomial::monomial(const Rational& coeff, Exponents exps) {
  Polynomial p;
  p.add_term(exps, coeff);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  *this = std::move(out);
  return *this;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1);
  for (unsigned i = 0; i < n; ++i) result *= *this;
  return result;
}

Polynomial Polynomial::substitute(const std::array<Polynomial, 3>& values) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term(c);
    for (int v = 0; v < 3; ++v) term *= values[v].pow(static_cast<unsigned>(e[v]));
    out += term;
  }
  return out;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first[0] + t.first[1] + t.first[2] == d; });
}

bool Polynomial::depends_on(int index) const {
  return std::any_of(terms_.begin(), terms_.end(), [index](const auto& t) { return t.first[index] > 0; });
}

std::optional<Rational> Polynomial::proportionality(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return std::nullopt;
  if (terms_.size() != other.terms_.size()) return std::nullopt;
  const Rational k = terms_.begin()->second / other.terms_.begin()->second;
  if (*this == other * Polynomial(k)) return k;
  return std::nullopt;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2];
    const int db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    bool wrote = false;
    if (mag != 1 || constant) {
      os << bachflow::to_string(mag);
      wrote = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (wrote) os << "*";
      os << kNames[v];
      if (e[v] > 1) os << "^" << e[v];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace bachflow
