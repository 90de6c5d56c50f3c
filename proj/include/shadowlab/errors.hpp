#pragma once

#include <stdexcept>
#include <string>

namespace shadowlab {

/// Thrown when a computation arrives at a configuration the library's
/// invariants say cannot exist (three simple-path shadows, a fiber that
/// should be odd coming out even, ...). Distinct from bad input.
class TheoremViolationError : public std::runtime_error {
 public:
  explicit TheoremViolationError(const std::string& what) : std::runtime_error(what) {}
};

/// A generator gave up after exhausting its retry budget.
class GeneratorExhaustedError : public std::runtime_error {
 public:
  explicit GeneratorExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shadowlab
