#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace whf {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: mismatched moduli, bad dimensions, invalid labels.
struct InvalidArgument : Error {
  using Error::Error;
};

/// An element lies outside the subgroup an operation is defined on.
struct DomainError : Error {
  using Error::Error;
};

/// A window whose Zak fiber mass vanishes (or nearly vanishes) on some
/// cell. Carries the offending cell (r, s0).
struct DegenerateWindow : Error {
  DegenerateWindow(const std::string& what, std::int64_t r, std::int64_t s0)
      : Error(what), r(r), s0(s0) {}
  std::int64_t r;
  std::int64_t s0;
};

/// Quadrature grid too coarse for the support of the function under test.
/// Carries the minimal admissible node counts.
struct QuadratureTooCoarse : InvalidArgument {
  QuadratureTooCoarse(const std::string& what, std::int64_t q1, std::int64_t q2)
      : InvalidArgument(what), required_q1(q1), required_q2(q2) {}
  std::int64_t required_q1;
  std::int64_t required_q2;
};

}  // namespace whf
