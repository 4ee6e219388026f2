#include "whf/gabor.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace whf {

namespace {

void require_nonzero(const Signal& f, const char* where) {
  if (f.norm_sq() == 0.0) {
    std::ostringstream msg;
    msg << where << ": zero window rejected";
    throw InvalidArgument(msg.str());
  }
}

Eigen::MatrixXd profile_of_grid(const ZakGrid& Z) {
  const std::int64_t a = Z.lattice.a, q = Z.lattice.q, L = Z.lattice.L;
  const std::int64_t cols = q / L;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(a, cols);
  for (std::int64_t r = 0; r < a; ++r)
    for (std::int64_t s0 = 0; s0 < cols; ++s0)
      for (std::int64_t i = 0; i < L; ++i)
        P(r, s0) += std::norm(Z.values(r, s0 + i * cols));
  return P;
}

}  // namespace

std::vector<Signal> gabor_system(const Signal& f) {
  require_nonzero(f, "gabor_system");
  const GaborLattice& lat = f.lattice;
  const std::int64_t a = lat.a, q = lat.q, L = lat.L, N = lat.N();
  std::vector<Signal> system;
  system.reserve(lat.system_size());
  for (std::int64_t n = 0; n < a * L; ++n) {
    const std::int64_t freq = n * (q / L);  // modulation bin of M_{n q/L}
    for (std::int64_t k = 0; k < q; ++k) {
      Eigen::VectorXcd v(N);
      for (std::int64_t t = 0; t < N; ++t)
        v[t] = unit_phase(freq * t, N) * f.values[floor_mod(t - k * a, N)];
      system.emplace_back(lat, std::move(v));
    }
  }
  return system;
}

Eigen::MatrixXcd frame_operator(const Signal& f) {
  require_nonzero(f, "frame_operator");
  const std::int64_t N = f.lattice.N();
  const std::vector<Signal> system = gabor_system(f);
  Eigen::MatrixXcd Psi(N, std::int64_t(system.size()));
  for (std::int64_t i = 0; i < std::int64_t(system.size()); ++i)
    Psi.col(i) = system[i].values;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
  S.selfadjointView<Eigen::Lower>().rankUpdate(Psi);
  return S.selfadjointView<Eigen::Lower>();
}

std::pair<double, double> frame_bounds(const Signal& f) {
  require_nonzero(f, "frame_bounds");
  const Eigen::MatrixXcd S = frame_operator(f);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(S, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  // S is positive semidefinite; clamp roundoff below zero.
  const double lower = std::max(0.0, ev(0));
  const double upper = ev(ev.size() - 1);
  return {lower, upper};
}

Eigen::MatrixXd zak_fiber_profile(const Signal& f) {
  return profile_of_grid(zak_forward(f));
}

TightnessReport is_tight_zak(const Signal& f, double tol) {
  require_nonzero(f, "is_tight_zak");
  const Eigen::MatrixXd P = zak_fiber_profile(f);
  TightnessReport report;
  report.tolerance = tol;
  report.criterion_min = P.minCoeff();
  report.criterion_max = P.maxCoeff();
  report.criterion_mean = P.mean();
  const double scale =
      double(f.lattice.L) * f.norm_sq() / double(f.lattice.a);
  report.tight = (report.criterion_max - report.criterion_min) <= tol * scale;
  report.normalized_tight =
      report.tight &&
      std::abs(report.criterion_mean * double(f.lattice.a) - 1.0) <= tol;
  std::tie(report.frame_lower, report.frame_upper) = frame_bounds(f);
  return report;
}

Signal tighten(const Signal& f, double eps) {
  const GaborLattice& lat = f.lattice;
  const std::int64_t cols = lat.q / lat.L;
  const ZakGrid Z = zak_forward(f);
  const Eigen::MatrixXd P = profile_of_grid(Z);
  const double mean = P.mean();
  for (std::int64_t r = 0; r < lat.a; ++r) {
    for (std::int64_t s0 = 0; s0 < cols; ++s0) {
      if (P(r, s0) < eps * mean || P(r, s0) == 0.0) {
        std::ostringstream msg;
        msg << "degenerate window: fiber mass " << P(r, s0) << " at cell (r=" << r
            << ", s0=" << s0 << ") is below " << eps << " of the mean " << mean;
        throw DegenerateWindow(msg.str(), r, s0);
      }
    }
  }
  Eigen::MatrixXcd scaled(lat.a, lat.q);
  for (std::int64_t r = 0; r < lat.a; ++r)
    for (std::int64_t s = 0; s < lat.q; ++s)
      scaled(r, s) = Z.values(r, s) / std::sqrt(double(lat.a) * P(r, s % cols));
  return zak_inverse(ZakGrid(lat, std::move(scaled)));
}

AdmissibilityDefect admissibility_defect(const Signal& f, const Signal& g) {
  if (!(f.lattice == g.lattice))
    throw InvalidArgument("admissibility_defect: signals on different lattices");
  const GaborLattice& lat = f.lattice;
  const std::int64_t a = lat.a, q = lat.q, L = lat.L, N = lat.N();

  AdmissibilityDefect result;
  for (std::int64_t n = 0; n < a * L; ++n) {
    const std::int64_t freq = n * (q / L);
    for (std::int64_t k = 0; k < q; ++k) {
      cplx ip(0.0, 0.0);
      for (std::int64_t t = 0; t < N; ++t)
        ip += std::conj(unit_phase(freq * t, N) *
                        f.values[floor_mod(t - k * a, N)]) *
              g.values[t];
      result.lattice_sum += std::norm(ip);
      for (std::int64_t l = 0; l < L; ++l) {
        const Signal h = pi_action(GroupElement(n, k, l, L), f);
        result.group_sum += std::norm(g.values.dot(h.values));
      }
    }
  }
  result.defect = std::abs(result.group_sum - double(L) * result.lattice_sum);
  return result;
}

}  // namespace whf
