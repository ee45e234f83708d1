#pragma once

#include <stdexcept>
#include <string>

namespace prosite {

// Malformed or inconsistent input (unknown labels, parse failures, violated
// preconditions on user data). Maps to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller handed an operation a value outside its contract, e.g. a
// non-spectral space to dlat_of_spectral.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A structural check failed; carries the index of the violated condition and
// the witness labels so callers can report them.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(int condition, std::string witness, const std::string& what)
      : std::runtime_error(what), condition_(condition), witness_(std::move(witness)) {}

  int condition() const { return condition_; }
  const std::string& witness() const { return witness_; }

 private:
  int condition_;
  std::string witness_;
};

// A configured cap (ideal count, point count) was exceeded. Maps to exit 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The operation has no meaning for this kind of input, e.g. structure rings
// of a model that does not come from a ring.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace prosite
