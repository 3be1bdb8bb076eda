#pragma once

#include <stdexcept>
#include <string>

namespace arboreal {

// A computation would exceed an explicit resource budget (sieve size, node cap).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bound derivation could not find admissible coefficients.
class derivation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree disagreed. Always a bug, never ignorable.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arboreal
