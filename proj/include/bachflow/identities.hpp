#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bachflow/catalog.hpp"
#include "bachflow/polynomial.hpp"

namespace bachflow {

/// A factorization used in a nonexistence or flatness argument, stated as
/// lhs == factor * rhs over Q[x, y, z]. `lhs` is built from the closed-form
/// quartics; `rhs` is the factored form written out by hand.
struct PolynomialIdentity {
  std::string name;
  GeometryId geometry;
  std::string statement;
  Polynomial lhs;
  Polynomial rhs;
  Rational factor{1};
};

struct IdentityCheck {
  std::string name;
  bool holds = false;
  /// k with lhs == k * rhs, when one exists.
  std::optional<Rational> observed_factor;
  Rational expected_factor{1};
};

const std::vector<PolynomialIdentity>& identity_registry();

/// Identities belonging to one geometry, in registry order.
std::vector<PolynomialIdentity> identities_for(GeometryId id);

/// Exact expansion check.
IdentityCheck check(const PolynomialIdentity& identity);

}  // namespace bachflow
