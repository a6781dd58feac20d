#pragma once

#include <stdexcept>
#include <string>

namespace kad {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables or structure definitions that violate a construction invariant.
class invalid_structure : public error {
 public:
  using error::error;
};

/// An operation that the model does not provide (missing star or converse table).
class missing_capability : public error {
 public:
  using error::error;
};

/// The max-plus semiring has no Kleene star: powers of a positive element are unbounded.
class star_unsupported : public missing_capability {
 public:
  star_unsupported() : missing_capability("star-unsupported") {}
};

/// Unbound variables, complements of non-tests and similar evaluation failures.
class evaluation_error : public error {
 public:
  using error::error;
};

/// Malformed program, test or workspace text.
class parse_error : public error {
 public:
  using error::error;
};

}  // namespace kad
