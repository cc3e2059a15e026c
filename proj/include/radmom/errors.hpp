#pragma once

#include <stdexcept>
#include <string>

namespace radmom {

// Requested accuracy cannot be met with the given quadrature/series resolution.
class accuracy_error : public std::runtime_error {
public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// State or sector outside the implemented table (n > 3, l > 0 transforms, m != 0).
class unsupported_state : public std::invalid_argument {
public:
  explicit unsupported_state(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace radmom
