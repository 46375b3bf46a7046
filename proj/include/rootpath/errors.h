/**
 * @file errors.h
 * @brief Exception hierarchy shared by the rootpath modules.
 */
#ifndef ROOTPATH_ERRORS_H
#define ROOTPATH_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootpath {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input failed validation (non-finite value, bad degree, wrong dimensions).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Synthetic division left a remainder above the acceptance threshold.
class DeflationError : public Error {
 public:
  DeflationError(const std::string& what, double remainder)
      : Error(what), remainder_(remainder) {}
  double remainder() const noexcept { return remainder_; }

 private:
  double remainder_;
};

/// Newton step attempted where the derivative is below the floor.
class SingularStepError : public Error {
 public:
  using Error::Error;
};

/// A coefficient path could not be built to avoid the singular set.
class PathConstructionError : public Error {
 public:
  using Error::Error;
};

/// Endpoint clustering is not stable under a change of linking radius.
class ClusterAmbiguityError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. position is a byte offset into the text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rootpath

#endif  // ROOTPATH_ERRORS_H
