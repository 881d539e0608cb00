#pragma once

#include <stdexcept>
#include <string>

namespace frattini {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input text violates a file format or grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid arguments: foreign elements, mismatched moduli,
/// non-normal subgroups, singular matrices, non-prime moduli.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (enumeration, lattice, coset index) would be
/// exceeded by the requested computation.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A generator-image assignment fails its well-definedness certificate.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace frattini
