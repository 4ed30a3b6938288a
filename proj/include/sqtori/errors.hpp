#pragma once

#include <stdexcept>
#include <string>

namespace sqtori {

// Argument outside the domain of an operation (n = 0, duplicate primes, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A result or intermediate does not fit the 64-bit integer domain.
class ArithmeticError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

// Generator pair with zero determinant.
class RankError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured memory or enumeration budget.
class ResourceError : public std::length_error {
public:
  using std::length_error::length_error;
};

} // namespace sqtori
