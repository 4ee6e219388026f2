#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace whf {

using cplx = std::complex<double>;

/// Mathematical (non-negative) remainder of x mod m, m > 0.
constexpr std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

/// exp(2*pi*i * num/den). The angle is reduced in integer arithmetic
/// before conversion to floating point, so phases accumulated through
/// different algebraic routes agree to machine precision.
inline cplx unit_phase(std::int64_t num, std::int64_t den) {
  const double turns = double(floor_mod(num, den)) / double(den);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

/// exp(2*pi*i*turns) for real-valued turns.
inline cplx unit_phase(double turns) {
  turns -= std::floor(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

}  // namespace whf
