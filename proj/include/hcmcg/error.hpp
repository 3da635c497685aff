#pragma once

#include <stdexcept>
#include <string>

namespace hcmcg {

// Base of every error raised by the library. The CLI prints what() verbatim.
struct Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : public Error {
  using Error::Error;
};

struct InvalidArgument : public Error {
  using Error::Error;
};

// A divided invariant (sgn/8, chi^2/2, ...) was applied to data that is not divisible.
struct DivisibilityError : public Error {
  using Error::Error;
};

struct RelatorViolation : public Error {
  using Error::Error;
};

struct TableExhausted : public Error {
  using Error::Error;
};

struct UnsupportedCase : public Error {
  using Error::Error;
};

}  // namespace hcmcg
