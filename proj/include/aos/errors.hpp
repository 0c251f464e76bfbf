#pragma once

#include <stdexcept>
#include <string>

namespace aos {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed LpModel: duplicate names, dangling coefficients, lower > upper.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Enumeration was asked to run on a model with an infinite bound.
class UnboundedModelError : public Error {
 public:
  using Error::Error;
};

/// brute_force_vertices refused to run: too many hyperplane subsets.
class CombinatorialGuardError : public Error {
 public:
  using Error::Error;
};

/// The solver lost numerical control (singular basis, iteration cap).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Dimension or name mismatch in projection and analysis calls.
class DimensionError : public Error {
 public:
  using Error::Error;
};

enum class NetworkErrorCode {
  schema,
  dangling_reference,
  nonpositive_reactance,
  disconnected,
  duplicate_line,
};

const char* to_string(NetworkErrorCode code);

class NetworkError : public Error {
 public:
  NetworkError(NetworkErrorCode code, const std::string& what)
      : Error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] NetworkErrorCode code() const { return code_; }

 private:
  NetworkErrorCode code_;
};

}  // namespace aos
