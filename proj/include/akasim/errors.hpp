#pragma once

#include <stdexcept>
#include <string>

namespace akasim {

// One exception type per error class named in the module contracts. Protocol
// failures (mac_failure, sync_failure, ...) are outcomes, not exceptions.
struct MalformedInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConflictError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExhaustionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedSchemeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnavailableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace akasim
