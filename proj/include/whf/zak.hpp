#pragma once

// Discrete Zak transform on length-N signals and the time-frequency
// representation it conjugates into translation form.
//
// Finite model: a signal has N = a*q samples per period; lattice time
// shifts move k*a samples and lattice modulations multiply by
// exp(2 pi i n t / (a L)). Requiring L | q puts every lattice modulation
// on an integer frequency bin (index n q / L), which is what makes the
// model exact rather than approximate.

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "whf/errors.hpp"
#include "whf/group.hpp"
#include "whf/phase.hpp"

namespace whf {

/// Discretization parameters (a, q, L): a samples per unit time, q unit
/// time periods, oversampling order L with L | q.
struct GaborLattice {
  std::int64_t a;
  std::int64_t q;
  std::int64_t L;

  GaborLattice(std::int64_t a, std::int64_t q, std::int64_t L);

  std::int64_t N() const { return a * q; }                  // signal length
  std::int64_t modulation_count() const { return a * L; }
  std::int64_t translation_count() const { return q; }
  std::int64_t system_size() const { return L * N(); }

  friend bool operator==(const GaborLattice&, const GaborLattice&) = default;
};

/// Length-N complex signal indexed by t in Z_N.
struct Signal {
  GaborLattice lattice;
  Eigen::VectorXcd values;

  Signal(GaborLattice lattice, Eigen::VectorXcd values);

  static Signal zero(const GaborLattice& lattice);
  static Signal delta(const GaborLattice& lattice, std::int64_t t = 0);

  double norm_sq() const { return values.squaredNorm(); }
};

/// a x q grid of Zak samples Zf(r, s). The grid point (r, s) sits at the
/// time-frequency position (r/a, s/q) in the fundamental domain.
struct ZakGrid {
  GaborLattice lattice;
  Eigen::MatrixXcd values;  // a rows, q columns

  ZakGrid(GaborLattice lattice, Eigen::MatrixXcd values);

  double norm_sq() const { return values.squaredNorm(); }
};

/// Zf(r, s) = sum_{m=0}^{q-1} f((r - m a) mod N) exp(+2 pi i m s / q),
/// evaluated row-by-row with length-q DFTs. Satisfies
/// sum |Zf|^2 = q ||f||^2.
ZakGrid zak_forward(const Signal& f);

/// Two-sided inverse of zak_forward:
/// f((r - m a) mod N) = (1/q) sum_s Z(r, s) exp(-2 pi i m s / q).
Signal zak_inverse(const ZakGrid& Z);

/// Time-frequency representation of G on signals:
///   (pi(n,k,l) f)(t) = e^{2 pi i (l - nk)/L} e^{2 pi i n t/(aL)} f(t - ka).
/// The action factors through n mod aL and k mod q. Unitary, and a
/// homomorphism for the group law of GroupElement.
Signal pi_action(const GroupElement& x, const Signal& f);

/// Conjugate of pi_action under the Zak transform, i.e. the unique map
/// with pihat_action(x, zak_forward(f)) = zak_forward(pi_action(x, f)).
/// Explicitly, with nu = n q / L and all indices reduced,
///   (pihat(n,k,l) Z)(r, s) =
///     e^{2 pi i (l - nk)/L} e^{2 pi i n r/(aL)} e^{-2 pi i k (s - nu)/q}
///       Z(r, (s - nu) mod q).
/// The translated grid argument carries the wrap phase e^{-2 pi i k (.)/q}
/// because a time shift by k full periods folds back into the fundamental
/// domain through the quasi-periodicity of the Zak transform. The sign of
/// the nk term in the leading phase is fixed by the intertwining identity
/// above, not chosen freely; see also fiber_irrep_label in plancherel.hpp
/// for where the resulting -omega2 pairing surfaces.
ZakGrid pihat_action(const GroupElement& x, const ZakGrid& Z);

}  // namespace whf
