#pragma once

#include <stdexcept>
#include <string>

namespace bei {

// Error type shared by the whole library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Refusal because a configured size cap was exceeded; callers may retry with
// larger caps or report the computation as undecided.
class CapError : public Error {
public:
  explicit CapError(const std::string& what) : Error(what) {}
};

}  // namespace bei
