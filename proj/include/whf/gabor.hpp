#pragma once

// Weyl-Heisenberg system generation, the dense frame-operator oracle, the
// Zak-domain tightness criterion, and tight-window construction.

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "whf/zak.hpp"

namespace whf {

inline constexpr double kDefaultTightnessTol = 1e-9;
inline constexpr double kDefaultDegenerateEps = 1e-10;

/// Outcome of a tightness check. criterion_* describe the fiber-sum
/// profile of the window (see zak_fiber_profile); frame_lower/upper are
/// the extreme eigenvalues of the frame operator, computed independently.
/// A valid report has tight == (profile flat within tolerance) and the
/// two routes never disagree; mean always equals L ||f||^2 / a.
struct TightnessReport {
  double criterion_min = 0.0;
  double criterion_max = 0.0;
  double criterion_mean = 0.0;
  double frame_lower = 0.0;
  double frame_upper = 0.0;
  bool tight = false;
  bool normalized_tight = false;  // additionally, constant profile == 1/a
  double tolerance = kDefaultTightnessTol;
};

/// The L*N member system {M_{n q/L} T_{k a} f : n in [0, aL), k in [0, q)}
/// in row-major (n, k) order, where M_j multiplies by exp(2 pi i j t / N)
/// and T_s shifts by s samples. Rejects the zero window.
std::vector<Signal> gabor_system(const Signal& f);

/// Frame operator S = sum_i g_i g_i^* over gabor_system(f). Hermitian
/// positive semidefinite with trace L N ||f||^2.
Eigen::MatrixXcd frame_operator(const Signal& f);

/// (min, max) eigenvalue of the frame operator, by dense Hermitian
/// eigendecomposition. This is the oracle path: unarguably correct,
/// not fast.
std::pair<double, double> frame_bounds(const Signal& f);

/// Fiber-sum profile P(r, s0) = sum_{i=0}^{L-1} |Zf(r, s0 + i q/L)|^2,
/// an a x (q/L) real matrix; the squared fiber norms of the Zak grid.
/// Its mean is always L ||f||^2 / a.
Eigen::MatrixXd zak_fiber_profile(const Signal& f);

/// Tightness check: the system is tight iff the profile is constant,
/// i.e. max - min <= tol * (L ||f||^2 / a). The report also carries the
/// frame bounds from the eigendecomposition oracle; normalized_tight
/// additionally requires the constant to equal 1/a (frame bound 1).
TightnessReport is_tight_zak(const Signal& f, double tol = kDefaultTightnessTol);

/// Canonical tight window: divides the Zak grid by sqrt(a * P) fiberwise
/// and transforms back. The result has constant profile 1/a, frame bounds
/// (1, 1), and squared norm 1/L. Fibers with mass below eps * mean are
/// refused with a DegenerateWindow error naming the offending cell.
Signal tighten(const Signal& f, double eps = kDefaultDegenerateEps);

/// Sums of squared correlations of g against the full finite quotient of
/// the group orbit of f (n in [0, aL), k in [0, q), l in [0, L)) and
/// against the plain lattice system. The group sum equals L times the
/// lattice sum; defect measures the floating-point deviation.
struct AdmissibilityDefect {
  double group_sum = 0.0;
  double lattice_sum = 0.0;
  double defect = 0.0;
};

AdmissibilityDefect admissibility_defect(const Signal& f, const Signal& g);

}  // namespace whf
