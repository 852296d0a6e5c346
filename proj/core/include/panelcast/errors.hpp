#pragma once

#include <stdexcept>
#include <string>

namespace panelcast {

// Base class for all library failures. The CLI maps each subclass to a
// distinct exit code, so throw the most specific one that applies.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration: unknown model tag, invalid chain budget, malformed
// config document. Exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Bad or insufficient data: transform-domain violations, duplicate ids,
// date gaps, empty designs, insufficient history. Exit code 3.
class DataError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: singular designs, Cholesky breakdown after jitter
// escalation, zero long-run variance in a DM test. Exit code 4.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Filesystem/serialization failure: unreadable files, corrupt stores. Exit code 5.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace panelcast
