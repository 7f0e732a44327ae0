#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnring {

/// Base class for every error raised by the library.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction would materialize a ring larger than the configured cap.
class CapExceeded : public RingError {
 public:
  CapExceeded(std::size_t requested, std::size_t cap)
      : RingError("ring order " + std::to_string(requested) + " exceeds the order cap " +
                  std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Bad input to an operation: a non-ideal, a non-idempotent corner element,
/// an argument out of range.
class InvalidArgument : public RingError {
 public:
  using RingError::RingError;
};

/// Tables that fail the ring axioms.
class InvalidRing : public RingError {
 public:
  using RingError::RingError;
};

/// A computed result contradicts a structural fact that must hold on every
/// finite ring. Always a bug in this library.
class InternalError : public RingError {
 public:
  using RingError::RingError;
};

}  // namespace qnring
