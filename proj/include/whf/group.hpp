#pragma once

// Exact arithmetic for the discrete Heisenberg-type group
//
//   G = Z x Z x Z/LZ,   (n,k,l)(n',k',l') = (n+n', k+k', l+l'+k'n mod L),
//
// together with its abelian normal subgroup N = {(nL, k, l)}, the dual
// action of G on characters of N, orbit transversals and fixed groups,
// the characters rho of the fixed groups N_j, the irreducibles of G
// induced from them, and the Plancherel weights 1/(L gcd(j,L)).

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "whf/errors.hpp"
#include "whf/phase.hpp"

namespace whf {

/// Element (n, k, l) of G. n is the modulation index, k the translation
/// index, l the central phase residue, kept canonical in [0, L). The
/// oversampling order L is carried along so that residues are reduced
/// consistently; elements with different L never combine.
struct GroupElement {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t L = 1;

  GroupElement() = default;
  GroupElement(std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t L);

  static GroupElement identity(std::int64_t L) { return GroupElement(0, 0, 0, L); }
  bool is_identity() const { return n == 0 && k == 0 && l == 0; }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Group law: (n,k,l)(n',k',l') = (n+n', k+k', l+l'+k'n mod L).
GroupElement multiply(const GroupElement& x, const GroupElement& y);

/// Inverse: (n,k,l)^{-1} = (-n, -k, -l+kn mod L).
GroupElement inverse(const GroupElement& x);

/// Returns true iff x lies in the abelian normal subgroup N = {(nL, k, l)}.
bool in_normal_subgroup(const GroupElement& x);

/// A character chi_{omega1,omega2,j} of N, evaluated as
///   chi(nL, k, l) = exp(2 pi i (omega1 n + omega2 k + j l / L)).
struct Character {
  double omega1 = 0.0;
  double omega2 = 0.0;
  std::int64_t j = 0;
};

/// Value of chi at x in N (throws DomainError if x is not in N).
cplx chi_eval(const Character& chi, const GroupElement& x);

/// Conjugation action of G on characters of N:
///   x.(omega1, omega2, j) = (omega1, frac(omega2 + j n / L), j).
/// Only the n coordinate of x matters.
Character dual_action(const GroupElement& x, const Character& chi);

/// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// gcd(j, L) with the convention gcd(0, L) = L, so that j = 0 labels the
/// orbits fixed by all of G.
std::int64_t orbit_gcd(std::int64_t j, std::int64_t L);

/// Orbit bookkeeping for the dual action at central frequency j:
/// the transversal of the omega2 orbits has width g/L, the fixed group
/// N_j = {(n L/g, k, l)} is generated over N by steps of L/g in the first
/// coordinate, and (i,0,0), i = 0..L/g-1, represent the N_j-cosets in G.
struct OrbitData {
  std::int64_t j = 0;
  std::int64_t L = 1;
  std::int64_t g = 1;                    // gcd(j, L), gcd(0, L) = L
  Rational omega2_width;                 // g/L, reduced
  std::int64_t fixed_group_step = 1;     // L/g
  std::vector<GroupElement> coset_reps;  // (i, 0, 0), i = 0..L/g-1
};

OrbitData orbit_data(std::int64_t j, std::int64_t L);

/// Label (j, m, omega1, omega2) of an irreducible of G of dimension L/g,
/// g = gcd(j, L); valid ranges are j in [0, L), m in [0, g),
/// omega1 in [0, 1), omega2 in [0, g/L).
struct IrrepLabel {
  std::int64_t L;
  std::int64_t j;
  std::int64_t m;
  double omega1;
  double omega2;

  IrrepLabel(std::int64_t L, std::int64_t j, std::int64_t m, double omega1,
             double omega2);

  std::int64_t g() const { return orbit_gcd(j, L); }
  std::int64_t dim() const { return L / g(); }
};

/// Character rho of the fixed group N_j:
///   rho(n' L/g, k, l) = exp(2 pi i ((omega1 + m) n'/g + omega2 k + j l / L)).
/// Throws DomainError unless (L/g) | x.n. Restricts on N to
/// chi_{omega1,omega2,j}.
cplx rho_eval(const IrrepLabel& label, const GroupElement& x);

/// Matrix of the irreducible induced from rho, realized on the coset
/// representatives r_i = (i,0,0): entry (i, i') is rho(r_i^{-1} x r_{i'})
/// when that element lies in N_j and 0 otherwise. Each row and column has
/// exactly one nonzero entry of modulus one, so the matrix is unitary.
Eigen::MatrixXcd induced_rep_matrix(const IrrepLabel& label, const GroupElement& x);

/// Density 1/(L g) of the Plancherel measure at the label, taken against
/// dm domega1 domega2 dj.
double plancherel_weight_density(const IrrepLabel& label);

/// Total mass sum_j sum_m 1/(Lg) * 1 * (g/L) * (L/g) of the dual, as an
/// exact rational. Equals 1 for every L.
Rational plancherel_total_mass(std::int64_t L);

/// Finitely supported complex function on G. All keys share one L; the
/// l^2 norm uses counting measure normalized by mu({e}) = 1.
class GroupFunction {
 public:
  explicit GroupFunction(std::int64_t L);

  static GroupFunction delta(const GroupElement& x);

  std::int64_t L() const { return L_; }

  /// Sets f(x) = value; a zero value erases the entry.
  void set(const GroupElement& x, cplx value);
  void add(const GroupElement& x, cplx value);
  cplx at(const GroupElement& x) const;  // 0 when absent

  const std::map<GroupElement, cplx>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// (max |n|, max |k|) over the support; (0, 0) when empty.
  std::pair<std::int64_t, std::int64_t> support_box() const;

  double l2_norm_sq() const;

 private:
  std::int64_t L_;
  std::map<GroupElement, cplx> entries_;
};

/// Operator-valued Fourier coefficient sum_x f(x) sigma(x) at the label.
Eigen::MatrixXcd group_fourier(const GroupFunction& f, const IrrepLabel& label);

}  // namespace whf
