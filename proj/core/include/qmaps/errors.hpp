#pragma once

#include <stdexcept>
#include <string>

namespace qmaps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Elements of different algebra objects were combined.
class OwnerMismatch : public Error {
 public:
  using Error::Error;
};

/// An expression mentions a generator that has no image or no declaration.
class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown or unassigned generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A requested map fails to respect the relations of its domain.
class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

/// Invalid construction input (bad sizes, duplicate names, bad indices).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A structural check that a construction relies on did not hold.
class DiagramInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace qmaps
