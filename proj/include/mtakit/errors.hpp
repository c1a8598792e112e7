#pragma once

#include <stdexcept>
#include <string>

namespace mtakit {

// Thrown when a Virasoro rewrite produces a mode outside the caller-supplied
// degree window. The window makes truncation of the (infinite) completion
// explicit instead of silent.
class WindowExceeded : public std::runtime_error {
public:
  explicit WindowExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an element grows past the MTAKIT_MAX_TERMS cap.
class TermLimitExceeded : public std::runtime_error {
public:
  explicit TermLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mtakit
