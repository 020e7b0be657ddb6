#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multideal {

// Base for every failure the library reports. code() is a stable
// machine-readable identifier; the CLI prints it verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

class ParseError : public Error {
public:
  ParseError(std::string code, const std::string& message, std::size_t position)
      : Error(std::move(code), message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class InvalidArgument : public Error {
public:
  explicit InvalidArgument(const std::string& message) : Error("invalid_argument", message) {}
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& message) : Error("dimension_mismatch", message) {}
};

class ZeroIdeal : public Error {
public:
  explicit ZeroIdeal(const std::string& message) : Error("zero_ideal", message) {}
};

class LimitExceeded : public Error {
public:
  explicit LimitExceeded(const std::string& message) : Error("limit_exceeded", message) {}
};

class Inconclusive : public Error {
public:
  explicit Inconclusive(const std::string& message) : Error("inconclusive", message) {}
};

}  // namespace multideal
