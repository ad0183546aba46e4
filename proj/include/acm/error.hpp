#pragma once

#include <stdexcept>
#include <string>

namespace acm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatches: different rings, wrong ranks, ambient module mismatch.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (inhomogeneous input, zero
/// polynomial where a degree is needed, non-prime modulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A construction ran but its certificate failed (torsion cokernel, retries
/// exhausted, map not well defined, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace acm
