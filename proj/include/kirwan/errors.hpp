#ifndef KIRWAN_ERRORS_HPP
#define KIRWAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kirwan {

/// A mathematical precondition of an operation does not hold for its input.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// The computation needs a second quadratic extension (or mixes two
/// incompatible ones). Only one adjoined square root is supported.
class FieldExtensionError : public PreconditionError {
 public:
  explicit FieldExtensionError(const std::string& what) : PreconditionError(what) {}
};

/// Malformed input data (JSON shape, unparsable scalars, bad symbols).
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kirwan

#endif
