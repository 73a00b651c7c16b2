#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pseudoboson {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented preconditions.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter is outside its admissible domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A truncated series or Fock-space model lost more mass than allowed.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class DegenerateNormalizer : public Error {
 public:
  using Error::Error;
};

class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

/// The decay bound |exp(-w)| <= C exp(-|x|) could not be established.
class DecayNotEstablished : public Error {
 public:
  using Error::Error;
};

/// A multiplication operator exceeded the overflow guard at some grid node.
class UnboundedMultiplier : public Error {
 public:
  UnboundedMultiplier(std::size_t node, double x)
      : Error("unbounded multiplier at node " + std::to_string(node) +
              " (x = " + std::to_string(x) + ")"),
        node_(node),
        x_(x) {}

  std::size_t node() const noexcept { return node_; }
  double x() const noexcept { return x_; }

 private:
  std::size_t node_;
  double x_;
};

}  // namespace pseudoboson
