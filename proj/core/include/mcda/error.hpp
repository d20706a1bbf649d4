#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace mcda {

/// Base class of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violated its domain (unordered fuzzy triple, power out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data. Messages carry the source name and cell coordinates.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Level partitioning found no extractable element in a non-empty iteration.
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure. Messages carry the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <typename... Parts>
std::string cat(Parts&&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

}  // namespace detail
}  // namespace mcda
