#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chevchow {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A homomorphism does not map domain relations into the codomain relations.
class IllFormedHom : public Error {
 public:
  using Error::Error;
};

class TorsionDomain : public Error {
 public:
  using Error::Error;
};

/// A finite-group or Weyl-group enumeration exceeded the configured cap.
class GroupTooLarge : public Error {
 public:
  GroupTooLarge(std::size_t cap)
      : Error("group enumeration exceeded cap of " + std::to_string(cap) +
              " elements"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class InvalidCartan : public Error {
 public:
  using Error::Error;
};

class DegreeTooLarge : public Error {
 public:
  using Error::Error;
};

/// A Schubert structure constant came out non-integral or negative.
class NonIntegralStructureConstant : public Error {
 public:
  using Error::Error;
};

/// The requested computation mode is not available for the given data.
class ModeUnsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace chevchow
