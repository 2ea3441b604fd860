#pragma once

#include <stdexcept>
#include <string>

namespace syzygy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulusError : public Error {
 public:
  using Error::Error;
};

class PrimeExhaustionError : public Error {
 public:
  using Error::Error;
};

/// Raised by exact rank when the matrix is larger than the certification cap.
class CertificationRefusedError : public Error {
 public:
  using Error::Error;
};

/// A curve model violates one of its invariants; the message names it.
class ModelInvalidError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// The degree of the line bundle is below 2g+1.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace syzygy
