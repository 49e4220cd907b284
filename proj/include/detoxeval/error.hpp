#pragma once

#include <stdexcept>
#include <string>

namespace detoxeval {

// Bad input data, bad arguments, schema violations. CLI exit code 1.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// External service failures (transport, malformed responses). CLI exit code 2.
class ClientError : public std::runtime_error {
  public:
    explicit ClientError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace detoxeval
