#pragma once

#include <stdexcept>
#include <string>

namespace bachflow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown geometry tag.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation (non-positive metric, tau <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The geometry exists in the catalog but the requested operation has no
/// meaning for it (e.g. a closed form that was never derived).
class UnsupportedGeometry : public Error {
 public:
  using Error::Error;
};

/// Asked for a potential function of a metric that is not a soliton.
class NoPotentialError : public Error {
 public:
  using Error::Error;
};

/// Command-line / config validation failure.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace bachflow
