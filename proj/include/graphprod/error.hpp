#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace graphprod {

// Malformed user input (graph6, JSON, word syntax, out-of-range indices).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what,
                      std::optional<std::size_t> byte_offset = std::nullopt)
      : std::invalid_argument(what), byte_offset_(byte_offset) {}

  std::optional<std::size_t> byte_offset() const { return byte_offset_; }

 private:
  std::optional<std::size_t> byte_offset_;
};

// A configured size or element-count limit would be exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace graphprod
