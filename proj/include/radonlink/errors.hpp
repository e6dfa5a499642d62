#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace radonlink {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of matrices, vectors or point sets do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (point files, rationals, result documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Some n+1 of the points lie in a common hyperplane.
///
/// `subset` holds 0-based point indices of an affinely dependent subset
/// (the lexicographically first violating (n+1)-subset when raised by the
/// general-position checker).
class GeneralPositionError : public Error {
 public:
  GeneralPositionError(std::vector<std::size_t> subset, const std::string& what);

  const std::vector<std::size_t>& subset() const noexcept { return subset_; }

 private:
  std::vector<std::size_t> subset_;
};

/// Operation invoked for the wrong parity of the dimension.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// A vector passed as a solution of the homogeneous system is not one.
class InvalidWitnessError : public Error {
 public:
  using Error::Error;
};

/// A certificate or result is structurally malformed.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Random generation gave up.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant that the theory guarantees did not hold. Always a
/// defect in this code, never an input problem.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Render 0-based indices as a 1-based set literal, e.g. "{1, 3, 4}".
std::string format_index_set(const std::vector<std::size_t>& indices);

}  // namespace radonlink
