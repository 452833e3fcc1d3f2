#pragma once

#include <stdexcept>
#include <string>

namespace srl {

// Malformed or inconsistent input data (treebank files, props files,
// checkpoints, external-vector files).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Bad run configuration (missing fields, dimension mismatches, unknown modes).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace srl
