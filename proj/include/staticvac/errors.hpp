#pragma once

#include <stdexcept>
#include <string>

namespace staticvac {

// Evaluation point outside the open domain of a geometry, or a grid touching u = 0.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Model parameters violating a family's admissible range (mass, dimension, genus).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A root-finding request with no real positive solution.
class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation not defined for the requested model kind or cosmological-constant sign.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace staticvac
