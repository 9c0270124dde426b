#pragma once

#include <stdexcept>
#include <string>

namespace galcluster {

/// Malformed textual input (cycle notation, group/model files, family specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element enumeration or lattice search would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition on otherwise well-formed data: degree mismatch,
/// subgroup not contained in its ambient group, invalid family parameters.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace galcluster
