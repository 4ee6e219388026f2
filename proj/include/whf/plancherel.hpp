#pragma once

// Numerical certification of the Plancherel identity on l^2(G) and of the
// fiber decomposition of the Zak-conjugated representation into induced
// irreducibles.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "whf/gabor.hpp"
#include "whf/group.hpp"
#include "whf/zak.hpp"

namespace whf {

inline constexpr double kDefaultPlancherelTol = 1e-8;
inline constexpr double kDefaultFiberTol = 1e-10;

/// Equispaced quadrature for the dual integrals: q1 nodes u/q1 on the
/// omega1 circle, and omega2 nodes on the global grid p/(q2 L) restricted
/// to [0, g/L) for each orbit. For a function with support box (Wn, Wk)
/// the rule is exact once q1 > 2 Wn + 1 and q2 > 2 Wk + 1: after the m-sum
/// the integrand contains only integer frequencies below those bounds.
struct QuadratureSpec {
  std::int64_t q1;
  std::int64_t q2;
};

/// Throws QuadratureTooCoarse (carrying the minimal admissible counts)
/// unless quad satisfies the exactness bound for f's support box.
void validate_quadrature(const QuadratureSpec& quad, const GroupFunction& f);

/// Minimal admissible node counts for f: (2 Wn + 2, 2 Wk + 2).
QuadratureSpec default_quadrature(const GroupFunction& f);

/// sum_j sum_m 1/(L g) * quadrature over the orbit transversal of
/// ||group_fourier(f, label)||_HS^2. Iteration order is fixed: j outer,
/// m inner, then the omega grid row-major, with sequential accumulation,
/// so results are reproducible bit for bit.
double plancherel_norm(const GroupFunction& f, const QuadratureSpec& quad);

struct PlancherelReport {
  double lhs = 0.0;  // sum |f(x)|^2
  double rhs = 0.0;  // plancherel_norm
  double discrepancy = 0.0;
  double tolerance = kDefaultPlancherelTol;
  bool pass = false;
};

PlancherelReport verify_plancherel(const GroupFunction& f, const QuadratureSpec& quad,
                                   double tol = kDefaultPlancherelTol);

/// Restriction of a Zak grid to the L-point fiber through (r, s0):
/// values_i = Z(r, s0 + i q/L), attached to omega = (r/a, s0/q).
struct FiberVector {
  double omega1 = 0.0;
  double omega2 = 0.0;
  std::int64_t L = 1;
  Eigen::VectorXcd values;  // length L

  double norm_sq() const { return values.squaredNorm(); }
};

FiberVector fiber_restrict(const ZakGrid& Z, std::int64_t r, std::int64_t s0);

/// Action of G on one fiber, the restriction of pihat_action:
///   (x . v)_i = e^{2 pi i (l - nk)/L} e^{2 pi i n omega1 / L}
///               e^{-2 pi i k omega2} e^{-2 pi i k (i - n)/L} v_{(i-n) mod L}.
/// Satisfies fiber_restrict(pihat_action(x, Z)) = fiber_action(x, fiber_restrict(Z)).
FiberVector fiber_action(const GroupElement& x, const FiberVector& v);

/// Matrix of fiber_action(x, .) on the fiber at omega.
Eigen::MatrixXcd fiber_action_matrix(const GroupElement& x, double omega1,
                                     double omega2, std::int64_t L);

/// The irreducible label acting on the fiber at omega = (omega1, omega2).
///
/// Sign convention: with the e^{+2 pi i m omega} Zak kernel, a lattice
/// time shift acts on a fiber by e^{-2 pi i k omega2}, so the character
/// of N realized on the delta fiber is chi at (omega1, -omega2). The
/// fiber at omega is therefore equivalent to the representation induced
/// from chi_{omega1, (-omega2 mod 1/L), 1}, and that is the label
/// returned here. At omega2 = 0 and omega2 = 1/(2L) — in particular on
/// every fiber grid point of a lattice with q = 2L — the reflection is
/// the identity.
IrrepLabel fiber_irrep_label(double omega1, double omega2, std::int64_t L);

/// Least-squares unitary intertwiner between two matrix tuples: finds
/// unitary U minimizing max_x ||U A_x - B_x U||_F via the stacked
/// Sylvester system and a polar projection, and returns that residual.
double unitary_intertwiner_residual(const std::vector<Eigen::MatrixXcd>& A,
                                    const std::vector<Eigen::MatrixXcd>& B,
                                    Eigen::MatrixXcd* intertwiner = nullptr);

struct FiberIrrepReport {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double label_omega2 = 0.0;  // omega2 coordinate of the matched label
  double residual = 0.0;
  double unitarity_defect = 0.0;
  double tolerance = kDefaultFiberTol;
  bool pass = false;
};

/// Certifies that the fiber representation at omega is unitarily
/// equivalent to the induced irreducible at fiber_irrep_label(omega):
/// builds both matrix tuples on the generators (1,0,0), (0,1,0), (0,0,1),
/// solves for a unitary intertwiner, and reports the residual.
FiberIrrepReport verify_fiber_irrep(double omega1, double omega2, std::int64_t L,
                                    double tol = kDefaultFiberTol);

}  // namespace whf
