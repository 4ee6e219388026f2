#pragma once

// Seeded deterministic random inputs for the verification suites. The
// generator output is mapped to doubles by hand so that a given seed
// produces identical values on every platform.

#include <cstdint>
#include <random>

#include "whf/group.hpp"
#include "whf/zak.hpp"

namespace whf {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return double(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }

  cplx complex_symmetric() {
    const double re = symmetric();
    const double im = symmetric();
    return {re, im};
  }

  /// Uniform in [0, bound).
  std::int64_t integer(std::int64_t bound) {
    return std::int64_t(eng_() % std::uint64_t(bound));
  }

 private:
  std::mt19937_64 eng_;
};

inline Signal random_signal(const GaborLattice& lattice, Rng& rng) {
  Eigen::VectorXcd v(lattice.N());
  for (std::int64_t t = 0; t < lattice.N(); ++t) v[t] = rng.complex_symmetric();
  return Signal(lattice, std::move(v));
}

/// Random element with coordinates bounded by the given extents.
inline GroupElement random_group_element(std::int64_t L, std::int64_t extent, Rng& rng) {
  const std::int64_t n = rng.integer(2 * extent + 1) - extent;
  const std::int64_t k = rng.integer(2 * extent + 1) - extent;
  const std::int64_t l = rng.integer(L);
  return GroupElement(n, k, l, L);
}

/// Fills the full box |n| <= box_n, |k| <= box_k, l in [0, L) with
/// uniform complex amplitudes.
inline GroupFunction random_group_function(std::int64_t L, std::int64_t box_n,
                                           std::int64_t box_k, Rng& rng) {
  GroupFunction f(L);
  for (std::int64_t n = -box_n; n <= box_n; ++n)
    for (std::int64_t k = -box_k; k <= box_k; ++k)
      for (std::int64_t l = 0; l < L; ++l)
        f.set(GroupElement(n, k, l, L), rng.complex_symmetric());
  return f;
}

}  // namespace whf
