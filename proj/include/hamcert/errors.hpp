#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamcert {

// Malformed arguments: out-of-range vertices, bad family parameters,
// violated order preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request exceeds a documented size limit (oracle cap, enumeration ceiling).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hamcert
