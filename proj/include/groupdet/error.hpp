#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace groupdet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a multiplication table fails the group axioms. For an
// associativity failure the offending triple is kept.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::array<std::uint32_t, 3> triple = {0, 0, 0},
                  bool has_triple = false)
      : Error(what), triple_(triple), has_triple_(has_triple) {}
  std::array<std::uint32_t, 3> triple() const { return triple_; }
  bool has_triple() const { return has_triple_; }

 private:
  std::array<std::uint32_t, 3> triple_;
  bool has_triple_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Mismatched domains, broken M-condition and similar shape problems.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class InversionError : public Error {
 public:
  using Error::Error;
};

// The determinant exists and is not bijective: a verdict, not a failure of method.
class NotInvertibleError : public InversionError {
 public:
  using InversionError::InversionError;
};

// The determinant method does not apply (some pivot is not bijective).
class DeterminantUndefinedError : public Error {
 public:
  DeterminantUndefinedError(const std::string& what, std::size_t step, std::size_t pivot)
      : Error(what), step_(step), pivot_(pivot) {}
  std::size_t step() const { return step_; }
  std::size_t pivot() const { return pivot_; }

 private:
  std::size_t step_;
  std::size_t pivot_;
};

class FactorizationError : public Error {
 public:
  using Error::Error;
};

}  // namespace groupdet
