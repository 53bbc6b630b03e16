#pragma once

#include <stdexcept>
#include <string>

namespace entropic {

// Invalid input: malformed documents, violated preconditions, out-of-range
// arguments. Maps to exit code 2 in the CLI.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// The request is valid but exceeds a configured resource bound (state-space
// caps, table sizes). Maps to exit code 3 in the CLI.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entropic
