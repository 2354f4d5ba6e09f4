#pragma once

#include <stdexcept>
#include <string>

namespace awlab {

/// Input outside the supported desk-scale range (rank guards, parse errors).
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// A structural invariant failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace awlab
