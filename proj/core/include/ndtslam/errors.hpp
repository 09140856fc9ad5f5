#pragma once

#include <stdexcept>
#include <string>

namespace ndtslam {

// Error taxonomy mirrors the CLI exit codes: config/usage problems,
// malformed or inconsistent data, and numerical failures.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ndtslam
