#pragma once

#include <stdexcept>
#include <string>

namespace onassign {

struct InvalidInstanceError : std::runtime_error {
  explicit InvalidInstanceError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidDistributionError : std::runtime_error {
  explicit InvalidDistributionError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameterError : std::runtime_error {
  explicit InvalidParameterError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidCertificateError : std::runtime_error {
  explicit InvalidCertificateError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInputError : std::runtime_error {
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a structural property that must hold by construction is
/// observed to fail (broken certifier, inconsistent sampler state, ...).
struct InternalConsistencyError : std::logic_error {
  explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace onassign
