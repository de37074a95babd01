#pragma once

#include <stdexcept>
#include <string>

namespace dosc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Root bracket without a sign change of the matching function.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Discretization failed its own h/h/2 consistency test.
class GridTooCoarse : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// No candidate radial system annihilates the closed-form solutions.
class ModelInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Polynomial degree exceeded the dense storage cap.
class DegreeOverflow : public std::length_error {
public:
  using std::length_error::length_error;
};

}  // namespace dosc
