#include "whf/plancherel.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>

namespace whf {

namespace {

// kron(A, B) with block (i,j) = A(i,j) * B
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  Eigen::MatrixXcd K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

}  // namespace

void validate_quadrature(const QuadratureSpec& quad, const GroupFunction& f) {
  const auto [bn, bk] = f.support_box();
  const std::int64_t need1 = 2 * bn + 2;
  const std::int64_t need2 = 2 * bk + 2;
  if (quad.q1 < need1 || quad.q2 < need2) {
    std::ostringstream msg;
    msg << "quadrature too coarse for support box (" << bn << ", " << bk
        << "): need q1 >= " << need1 << " and q2 >= " << need2 << ", got q1="
        << quad.q1 << ", q2=" << quad.q2;
    throw QuadratureTooCoarse(msg.str(), need1, need2);
  }
}

QuadratureSpec default_quadrature(const GroupFunction& f) {
  const auto [bn, bk] = f.support_box();
  return QuadratureSpec{2 * bn + 2, 2 * bk + 2};
}

double plancherel_norm(const GroupFunction& f, const QuadratureSpec& quad) {
  validate_quadrature(quad, f);
  const std::int64_t L = f.L();
  double total = 0.0;
  for (std::int64_t j = 0; j < L; ++j) {
    const std::int64_t g = orbit_gcd(j, L);
    // Plancherel density times the node weights of both omega rules.
    const double weight = 1.0 / (double(L) * double(g)) / double(quad.q1) /
                          (double(quad.q2) * double(L));
    for (std::int64_t m = 0; m < g; ++m) {
      for (std::int64_t u = 0; u < quad.q1; ++u) {
        const double omega1 = double(u) / double(quad.q1);
        for (std::int64_t p = 0; p < quad.q2 * g; ++p) {
          const double omega2 = double(p) / double(quad.q2 * L);
          const IrrepLabel label(L, j, m, omega1, omega2);
          total += weight * group_fourier(f, label).squaredNorm();
        }
      }
    }
  }
  return total;
}

PlancherelReport verify_plancherel(const GroupFunction& f, const QuadratureSpec& quad,
                                   double tol) {
  PlancherelReport report;
  report.tolerance = tol;
  report.lhs = f.l2_norm_sq();
  report.rhs = plancherel_norm(f, quad);
  report.discrepancy = std::abs(report.lhs - report.rhs);
  report.pass = report.discrepancy <= tol * report.lhs;
  return report;
}

FiberVector fiber_restrict(const ZakGrid& Z, std::int64_t r, std::int64_t s0) {
  const GaborLattice& lat = Z.lattice;
  const std::int64_t cols = lat.q / lat.L;
  if (r < 0 || r >= lat.a || s0 < 0 || s0 >= cols)
    throw InvalidArgument("fiber_restrict: index out of range");
  FiberVector v;
  v.omega1 = double(r) / double(lat.a);
  v.omega2 = double(s0) / double(lat.q);
  v.L = lat.L;
  v.values.resize(lat.L);
  for (std::int64_t i = 0; i < lat.L; ++i) v.values[i] = Z.values(r, s0 + i * cols);
  return v;
}

FiberVector fiber_action(const GroupElement& x, const FiberVector& v) {
  if (x.L != v.L) throw InvalidArgument("fiber_action: mismatched L");
  const std::int64_t L = v.L;
  FiberVector out = v;
  for (std::int64_t i = 0; i < L; ++i) {
    const std::int64_t src = floor_mod(i - x.n, L);
    const double turns =
        double(floor_mod(x.l - x.n * x.k - x.k * (i - x.n), L)) / double(L) +
        double(x.n) * v.omega1 / double(L) - double(x.k) * v.omega2;
    out.values[i] = unit_phase(turns) * v.values[src];
  }
  return out;
}

Eigen::MatrixXcd fiber_action_matrix(const GroupElement& x, double omega1,
                                     double omega2, std::int64_t L) {
  FiberVector basis;
  basis.omega1 = omega1;
  basis.omega2 = omega2;
  basis.L = L;
  Eigen::MatrixXcd M(L, L);
  for (std::int64_t c = 0; c < L; ++c) {
    basis.values = Eigen::VectorXcd::Zero(L);
    basis.values[c] = cplx(1.0, 0.0);
    M.col(c) = fiber_action(x, basis).values;
  }
  return M;
}

IrrepLabel fiber_irrep_label(double omega1, double omega2, std::int64_t L) {
  if (L < 1) throw InvalidArgument("oversampling order L must be positive");
  const double width = 1.0 / double(L);
  if (!(omega1 >= 0.0 && omega1 < 1.0) || !(omega2 >= 0.0 && omega2 < width))
    throw InvalidArgument("fiber_irrep_label: omega outside [0,1) x [0,1/L)");
  // Lattice time shifts act on fibers by e^{-2 pi i k omega2}, so the
  // character realized on the delta fiber sits at -omega2; reflect into
  // the transversal.
  const double reflected = omega2 == 0.0 ? 0.0 : width - omega2;
  const std::int64_t j = L == 1 ? 0 : 1;
  return IrrepLabel(L, j, 0, omega1, reflected);
}

double unitary_intertwiner_residual(const std::vector<Eigen::MatrixXcd>& A,
                                    const std::vector<Eigen::MatrixXcd>& B,
                                    Eigen::MatrixXcd* intertwiner) {
  if (A.empty() || A.size() != B.size())
    throw InvalidArgument("unitary_intertwiner_residual: mismatched matrix tuples");
  const Eigen::Index d = A[0].rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  // Stack the Sylvester constraints U A_x - B_x U = 0 on vec(U).
  Eigen::MatrixXcd M(Eigen::Index(A.size()) * d * d, d * d);
  for (std::size_t x = 0; x < A.size(); ++x)
    M.middleRows(Eigen::Index(x) * d * d, d * d) =
        kron(A[x].transpose(), id) - kron(id, B[x]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinV);
  const Eigen::VectorXcd vec = svd.matrixV().col(d * d - 1);
  Eigen::MatrixXcd U0 = Eigen::Map<const Eigen::MatrixXcd>(vec.data(), d, d);
  // Project onto the unitary group through the polar decomposition.
  Eigen::JacobiSVD<Eigen::MatrixXcd> polar(U0, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd U = polar.matrixU() * polar.matrixV().adjoint();
  double residual = 0.0;
  for (std::size_t x = 0; x < A.size(); ++x)
    residual = std::max(residual, (U * A[x] - B[x] * U).norm());
  if (intertwiner != nullptr) *intertwiner = U;
  return residual;
}

FiberIrrepReport verify_fiber_irrep(double omega1, double omega2, std::int64_t L,
                                    double tol) {
  const IrrepLabel label = fiber_irrep_label(omega1, omega2, L);
  const std::vector<GroupElement> generators = {
      GroupElement(1, 0, 0, L), GroupElement(0, 1, 0, L), GroupElement(0, 0, 1, L)};
  std::vector<Eigen::MatrixXcd> fiber_side;
  std::vector<Eigen::MatrixXcd> induced_side;
  for (const GroupElement& x : generators) {
    fiber_side.push_back(fiber_action_matrix(x, omega1, omega2, L));
    induced_side.push_back(induced_rep_matrix(label, x));
  }
  Eigen::MatrixXcd U;
  FiberIrrepReport report;
  report.omega1 = omega1;
  report.omega2 = omega2;
  report.label_omega2 = label.omega2;
  report.tolerance = tol;
  report.residual = unitary_intertwiner_residual(fiber_side, induced_side, &U);
  report.unitarity_defect =
      (U.adjoint() * U - Eigen::MatrixXcd::Identity(L, L)).norm();
  report.pass = report.residual <= tol && report.unitarity_defect <= tol;
  return report;
}

}  // namespace whf
