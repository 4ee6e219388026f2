#include "whf/zak.hpp"

#include <mutex>
#include <sstream>
#include <vector>

#include <fftw3.h>

namespace whf {

namespace {

// FFTW execution is thread-safe; planner access is not.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class DftPlan {
 public:
  DftPlan(std::int64_t size, int sign) : in_(size), out_(size) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(int(size), reinterpret_cast<fftw_complex*>(in_.data()),
                             reinterpret_cast<fftw_complex*>(out_.data()), sign,
                             FFTW_ESTIMATE);
  }
  ~DftPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  DftPlan(const DftPlan&) = delete;
  DftPlan& operator=(const DftPlan&) = delete;

  std::vector<cplx>& in() { return in_; }
  const std::vector<cplx>& out() const { return out_; }
  void execute() { fftw_execute(plan_); }

 private:
  std::vector<cplx> in_;
  std::vector<cplx> out_;
  fftw_plan plan_;
};

void check_same_L(const GroupElement& x, const GaborLattice& lattice,
                  const char* where) {
  if (x.L != lattice.L) {
    std::ostringstream msg;
    msg << where << ": group element has L=" << x.L << " but lattice has L="
        << lattice.L;
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

GaborLattice::GaborLattice(std::int64_t a, std::int64_t q, std::int64_t L)
    : a(a), q(q), L(L) {
  if (a < 1 || q < 1 || L < 1)
    throw InvalidArgument("lattice parameters must be positive");
  if (q % L != 0)
    throw InvalidArgument("lattice requires L | q so modulations land on integer bins");
}

Signal::Signal(GaborLattice lattice, Eigen::VectorXcd values)
    : lattice(lattice), values(std::move(values)) {
  if (this->values.size() != lattice.N())
    throw InvalidArgument("signal length does not match lattice N = a*q");
}

Signal Signal::zero(const GaborLattice& lattice) {
  return Signal(lattice, Eigen::VectorXcd::Zero(lattice.N()));
}

Signal Signal::delta(const GaborLattice& lattice, std::int64_t t) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(lattice.N());
  v[floor_mod(t, lattice.N())] = cplx(1.0, 0.0);
  return Signal(lattice, std::move(v));
}

ZakGrid::ZakGrid(GaborLattice lattice, Eigen::MatrixXcd values)
    : lattice(lattice), values(std::move(values)) {
  if (this->values.rows() != lattice.a || this->values.cols() != lattice.q)
    throw InvalidArgument("Zak grid dimensions do not match lattice (a x q)");
}

ZakGrid zak_forward(const Signal& f) {
  const GaborLattice& lat = f.lattice;
  const std::int64_t a = lat.a, q = lat.q, N = lat.N();
  Eigen::MatrixXcd Z(a, q);
  DftPlan plan(q, FFTW_BACKWARD);  // e^{+2 pi i m s / q}, unnormalized
  for (std::int64_t r = 0; r < a; ++r) {
    for (std::int64_t m = 0; m < q; ++m)
      plan.in()[m] = f.values[floor_mod(r - m * a, N)];
    plan.execute();
    for (std::int64_t s = 0; s < q; ++s) Z(r, s) = plan.out()[s];
  }
  return ZakGrid(lat, std::move(Z));
}

Signal zak_inverse(const ZakGrid& Z) {
  const GaborLattice& lat = Z.lattice;
  const std::int64_t a = lat.a, q = lat.q, N = lat.N();
  Eigen::VectorXcd f(N);
  DftPlan plan(q, FFTW_FORWARD);  // e^{-2 pi i m s / q}
  const double scale = 1.0 / double(q);
  for (std::int64_t r = 0; r < a; ++r) {
    for (std::int64_t s = 0; s < q; ++s) plan.in()[s] = Z.values(r, s);
    plan.execute();
    for (std::int64_t m = 0; m < q; ++m)
      f[floor_mod(r - m * a, N)] = scale * plan.out()[m];
  }
  return Signal(lat, std::move(f));
}

Signal pi_action(const GroupElement& x, const Signal& f) {
  check_same_L(x, f.lattice, "pi_action");
  const GaborLattice& lat = f.lattice;
  const std::int64_t a = lat.a, q = lat.q, L = lat.L, N = lat.N();
  const std::int64_t aL = a * L;
  const std::int64_t D = N * L;  // a*L*q, the common phase denominator
  // The action factors through n mod aL and k mod q.
  const std::int64_t n = floor_mod(x.n, aL);
  const std::int64_t k = floor_mod(x.k, q);
  const std::int64_t lead = (x.l - n * k) * a * q;  // (l - nk)/L over D
  Eigen::VectorXcd out(N);
  for (std::int64_t t = 0; t < N; ++t)
    out[t] = unit_phase(lead + n * q * t, D) * f.values[floor_mod(t - k * a, N)];
  return Signal(lat, std::move(out));
}

ZakGrid pihat_action(const GroupElement& x, const ZakGrid& Z) {
  check_same_L(x, Z.lattice, "pihat_action");
  const GaborLattice& lat = Z.lattice;
  const std::int64_t a = lat.a, q = lat.q, L = lat.L;
  const std::int64_t aL = a * L;
  const std::int64_t D = a * L * q;
  const std::int64_t n = floor_mod(x.n, aL);
  const std::int64_t k = floor_mod(x.k, q);
  const std::int64_t nu = floor_mod(n * (q / L), q);
  const std::int64_t lead = (x.l - n * k) * a * q;
  Eigen::MatrixXcd out(a, q);
  for (std::int64_t r = 0; r < a; ++r) {
    for (std::int64_t s = 0; s < q; ++s) {
      const std::int64_t s_src = floor_mod(s - nu, q);
      const std::int64_t num = lead + n * r * q - k * s_src * aL;
      out(r, s) = unit_phase(num, D) * Z.values(r, s_src);
    }
  }
  return ZakGrid(lat, std::move(out));
}

}  // namespace whf
