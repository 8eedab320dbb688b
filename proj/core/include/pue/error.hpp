#pragma once

#include <stdexcept>
#include <string>

namespace pue {

/// Base for every error the toolkit raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counts, radii or matrix sizes outside their allowed range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A formula evaluated outside its mathematical domain (zero distance, zero power).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Empirical model asked for parameters outside its validity window.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Inputs that violate a stated validity condition of a test or bound.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration, unknown preset names, unreadable files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace pue
