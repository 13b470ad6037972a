#pragma once

#include <stdexcept>
#include <string>

namespace subnil {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a closure or probability computation exceeds its element cap.
struct CapExceeded : Error {
  using Error::Error;
};

} // namespace subnil
