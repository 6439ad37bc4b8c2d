#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdikit {

/// Malformed or inconsistent input: unknown symbol, alphabet mismatch,
/// bad file syntax, invalid operand for an operation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction exceeded its configured state budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t states_explored)
      : std::runtime_error(what), states_explored_(states_explored) {}

  std::size_t states_explored() const noexcept { return states_explored_; }

 private:
  std::size_t states_explored_;
};

}  // namespace sdikit
