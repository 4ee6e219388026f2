#pragma once

// Test-only reference implementations. These stay deliberately naive and
// independent of the library's transform paths: literal sums, no FFT, no
// shared bookkeeping.

#include <Eigen/Dense>

#include "whf/group.hpp"
#include "whf/zak.hpp"

namespace whf::test {

/// Literal evaluation of Zf(r, s) = sum_m f(r - m a) e^{+2 pi i m s / q}.
inline Eigen::MatrixXcd zak_oracle(const Signal& f) {
  const GaborLattice& lat = f.lattice;
  Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(lat.a, lat.q);
  for (std::int64_t r = 0; r < lat.a; ++r)
    for (std::int64_t s = 0; s < lat.q; ++s)
      for (std::int64_t m = 0; m < lat.q; ++m)
        Z(r, s) += f.values[floor_mod(r - m * lat.a, lat.N())] *
                   unit_phase(m * s, lat.q);
  return Z;
}

/// sum_m v[m] e^{+2 pi i m s / M}.
inline Eigen::VectorXcd dft_plus_oracle(const Eigen::VectorXcd& v) {
  const std::int64_t M = v.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(M);
  for (std::int64_t s = 0; s < M; ++s)
    for (std::int64_t m = 0; m < M; ++m) out[s] += v[m] * unit_phase(m * s, M);
  return out;
}

/// Plancherel identity for the abelian subgroup N = {(nL, k, l)}: the dual
/// is [0,1)^2 x {0..L-1} carrying (1/L) du dv x counting measure, and the
/// transform is the plain character sum. Equispaced quadrature with
/// Q1 > 2 max|n/L| and Q2 > 2 max|k| nodes is exact. Requires all keys of
/// f to lie in N.
inline double abelian_plancherel_oracle(const GroupFunction& f, std::int64_t Q1,
                                        std::int64_t Q2) {
  const std::int64_t L = f.L();
  double total = 0.0;
  for (std::int64_t j = 0; j < L; ++j)
    for (std::int64_t u = 0; u < Q1; ++u)
      for (std::int64_t p = 0; p < Q2; ++p) {
        const Character chi{double(u) / double(Q1), double(p) / double(Q2), j};
        cplx hat(0.0, 0.0);
        for (const auto& [x, v] : f.entries()) hat += v * chi_eval(chi, x);
        total += std::norm(hat) / (double(L) * double(Q1) * double(Q2));
      }
  return total;
}

/// Dense matrix of the lattice operator M_{n q/L} T_{k a} on C^N.
inline Eigen::MatrixXcd lattice_operator_matrix(const GaborLattice& lat,
                                                std::int64_t n, std::int64_t k) {
  const std::int64_t N = lat.N();
  const std::int64_t freq = n * (lat.q / lat.L);
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(N, N);
  for (std::int64_t t = 0; t < N; ++t)
    U(t, floor_mod(t - k * lat.a, N)) = unit_phase(freq * t, N);
  return U;
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace whf::test
