/**
 * @file common.hpp
 * @brief Shared error taxonomy for the exact-arithmetic verification library.
 *
 * Every failure mode that the public interfaces promise to report has a typed
 * exception here so callers (CLI, bindings, tests) can distinguish a
 * mathematical impossibility (division by zero, singular leading minor) from
 * a usage problem (mode mismatch, bad configuration) or a resource guard.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qca {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by an exact zero (scalar, polynomial, rational function, series).
class ZeroDivisionError : public Error {
 public:
  explicit ZeroDivisionError(const std::string& what = "division by zero")
      : Error(what) {}
};

/// Arithmetic between scalars constructed under different q-modes
/// (symbolic vs pinned, or two different pinned values).
class ModeMismatchError : public Error {
 public:
  explicit ModeMismatchError(const std::string& what = "q-mode mismatch")
      : Error(what) {}
};

/// Internal signal: the 64-bit coefficient fast path would overflow and the
/// caller must redo the computation with arbitrary-precision coefficients.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what = "int64 coefficient overflow")
      : Error(what) {}
};

/// Malformed textual form of a scalar / rational function / multi-index.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Shape or dimension mismatch between operators / sites.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Out-of-range basis index, invalid site position, repeated position.
class IndexError : public Error {
 public:
  explicit IndexError(const std::string& what) : Error(what) {}
};

/// A matrix (or leading minor) that must be invertible is singular.
/// `minor_index` is the 1-based index of the offending leading block when the
/// failure comes from a Gauss decomposition, and 0 otherwise.
class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& what, int minor_index = 0)
      : Error(what), minor_index_(minor_index) {}
  int minor_index() const { return minor_index_; }

 private:
  int minor_index_;
};

/// Invalid suite / operator configuration (unknown variant, n < 1, repeated
/// evaluation parameter, resource guard, ...).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Identity verification infrastructure errors: a declared degree bound was
/// too small, or admissible sample points ran out.
class BoundError : public Error {
 public:
  explicit BoundError(const std::string& what) : Error(what) {}
};

/// A truncated-series window is too small for the requested coefficient.
class WindowError : public Error {
 public:
  explicit WindowError(const std::string& what) : Error(what) {}
};

}  // namespace qca
