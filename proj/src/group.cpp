#include "whf/group.hpp"

#include <numeric>
#include <sstream>

namespace whf {

namespace {

void check_same_L(const GroupElement& x, const GroupElement& y) {
  if (x.L != y.L) {
    std::ostringstream msg;
    msg << "group elements with different moduli cannot combine (L=" << x.L
        << " vs L=" << y.L << ")";
    throw InvalidArgument(msg.str());
  }
}

Rational reduced(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

Rational rat_add(const Rational& a, const Rational& b) {
  return reduced(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational rat_mul(const Rational& a, const Rational& b) {
  return reduced(a.num * b.num, a.den * b.den);
}

// Row i of the induced matrix: the unique nonzero column and its value,
// rho(r_i^{-1} x r_{i'}) at the column i' with (L/g) | (n + i' - i).
std::pair<std::int64_t, cplx> induced_row(const IrrepLabel& label,
                                          const GroupElement& x, std::int64_t i) {
  const std::int64_t d = label.dim();
  const std::int64_t ip = floor_mod(i - x.n, d);
  const GroupElement elem(x.n + ip - i, x.k, x.l - i * x.k, x.L);
  return {ip, rho_eval(label, elem)};
}

}  // namespace

GroupElement::GroupElement(std::int64_t n, std::int64_t k, std::int64_t l,
                           std::int64_t L)
    : n(n), k(k), l(0), L(L) {
  if (L < 1) throw InvalidArgument("oversampling order L must be positive");
  this->l = floor_mod(l, L);
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  check_same_L(x, y);
  return GroupElement(x.n + y.n, x.k + y.k, x.l + y.l + y.k * x.n, x.L);
}

GroupElement inverse(const GroupElement& x) {
  return GroupElement(-x.n, -x.k, -x.l + x.k * x.n, x.L);
}

bool in_normal_subgroup(const GroupElement& x) { return x.n % x.L == 0; }

cplx chi_eval(const Character& chi, const GroupElement& x) {
  if (chi.j < 0 || chi.j >= x.L) throw InvalidArgument("character index j out of range");
  if (!in_normal_subgroup(x)) throw DomainError("chi is defined on N = {(nL, k, l)} only");
  const std::int64_t n_hat = x.n / x.L;
  const double turns = chi.omega1 * double(n_hat) + chi.omega2 * double(x.k) +
                       double(floor_mod(chi.j * x.l, x.L)) / double(x.L);
  return unit_phase(turns);
}

Character dual_action(const GroupElement& x, const Character& chi) {
  if (chi.j < 0 || chi.j >= x.L) throw InvalidArgument("character index j out of range");
  // j n / L mod 1, reduced in integers so exact inputs stay exact
  const double shift = double(floor_mod(chi.j * x.n, x.L)) / double(x.L);
  double omega2 = chi.omega2 + shift;
  if (omega2 >= 1.0) omega2 -= 1.0;
  return Character{chi.omega1, omega2, chi.j};
}

std::int64_t orbit_gcd(std::int64_t j, std::int64_t L) {
  return j == 0 ? L : std::gcd(j, L);
}

OrbitData orbit_data(std::int64_t j, std::int64_t L) {
  if (L < 1) throw InvalidArgument("oversampling order L must be positive");
  if (j < 0 || j >= L) throw InvalidArgument("orbit index j out of range [0, L)");
  OrbitData d;
  d.j = j;
  d.L = L;
  d.g = orbit_gcd(j, L);
  d.omega2_width = reduced(d.g, L);
  d.fixed_group_step = L / d.g;
  d.coset_reps.reserve(d.fixed_group_step);
  for (std::int64_t i = 0; i < d.fixed_group_step; ++i)
    d.coset_reps.push_back(GroupElement(i, 0, 0, L));
  return d;
}

IrrepLabel::IrrepLabel(std::int64_t L, std::int64_t j, std::int64_t m,
                       double omega1, double omega2)
    : L(L), j(j), m(m), omega1(omega1), omega2(omega2) {
  if (L < 1) throw InvalidArgument("oversampling order L must be positive");
  if (j < 0 || j >= L) throw InvalidArgument("irrep label: j out of range [0, L)");
  const std::int64_t gj = orbit_gcd(j, L);
  if (m < 0 || m >= gj) throw InvalidArgument("irrep label: m out of range [0, g)");
  if (!(omega1 >= 0.0 && omega1 < 1.0))
    throw InvalidArgument("irrep label: omega1 out of range [0, 1)");
  const double width = double(gj) / double(L);
  if (!(omega2 >= 0.0 && omega2 < width))
    throw InvalidArgument("irrep label: omega2 out of range [0, g/L)");
}

cplx rho_eval(const IrrepLabel& label, const GroupElement& x) {
  if (x.L != label.L) throw InvalidArgument("rho_eval: mismatched L");
  const std::int64_t g = label.g();
  const std::int64_t step = label.L / g;
  if (floor_mod(x.n, step) != 0)
    throw DomainError("rho is defined on the fixed group N_j only: (L/g) | n required");
  const std::int64_t n_prime = x.n / step;
  const double turns = label.omega1 * double(n_prime) / double(g) +
                       double(floor_mod(label.m * n_prime, g)) / double(g) +
                       label.omega2 * double(x.k) +
                       double(floor_mod(label.j * x.l, label.L)) / double(label.L);
  return unit_phase(turns);
}

Eigen::MatrixXcd induced_rep_matrix(const IrrepLabel& label, const GroupElement& x) {
  if (x.L != label.L) throw InvalidArgument("induced_rep_matrix: mismatched L");
  const std::int64_t d = label.dim();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d, d);
  for (std::int64_t i = 0; i < d; ++i) {
    const auto [col, value] = induced_row(label, x, i);
    M(i, col) = value;
  }
  return M;
}

double plancherel_weight_density(const IrrepLabel& label) {
  return 1.0 / (double(label.L) * double(label.g()));
}

Rational plancherel_total_mass(std::int64_t L) {
  if (L < 1) throw InvalidArgument("oversampling order L must be positive");
  Rational total{0, 1};
  for (std::int64_t j = 0; j < L; ++j) {
    const std::int64_t g = orbit_gcd(j, L);
    for (std::int64_t m = 0; m < g; ++m) {
      // density * omega1 mass * omega2 mass * dimension
      Rational term = rat_mul(Rational{1, L * g}, Rational{1, 1});
      term = rat_mul(term, reduced(g, L));
      term = rat_mul(term, reduced(L, g));
      total = rat_add(total, term);
    }
  }
  return total;
}

GroupFunction::GroupFunction(std::int64_t L) : L_(L) {
  if (L < 1) throw InvalidArgument("oversampling order L must be positive");
}

GroupFunction GroupFunction::delta(const GroupElement& x) {
  GroupFunction f(x.L);
  f.set(x, cplx(1.0, 0.0));
  return f;
}

void GroupFunction::set(const GroupElement& x, cplx value) {
  if (x.L != L_) throw InvalidArgument("GroupFunction: key with mismatched L");
  if (value == cplx(0.0, 0.0)) {
    entries_.erase(x);
  } else {
    entries_[x] = value;
  }
}

void GroupFunction::add(const GroupElement& x, cplx value) { set(x, at(x) + value); }

cplx GroupFunction::at(const GroupElement& x) const {
  const auto it = entries_.find(x);
  return it == entries_.end() ? cplx(0.0, 0.0) : it->second;
}

std::pair<std::int64_t, std::int64_t> GroupFunction::support_box() const {
  std::int64_t bn = 0;
  std::int64_t bk = 0;
  for (const auto& [x, v] : entries_) {
    bn = std::max(bn, std::abs(x.n));
    bk = std::max(bk, std::abs(x.k));
  }
  return {bn, bk};
}

double GroupFunction::l2_norm_sq() const {
  double total = 0.0;
  for (const auto& [x, v] : entries_) total += std::norm(v);
  return total;
}

Eigen::MatrixXcd group_fourier(const GroupFunction& f, const IrrepLabel& label) {
  if (f.L() != label.L) throw InvalidArgument("group_fourier: mismatched L");
  const std::int64_t d = label.dim();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d, d);
  // sum_x f(x) sigma(x), accumulated through the single nonzero per row
  for (const auto& [x, v] : f.entries())
    for (std::int64_t i = 0; i < d; ++i) {
      const auto [col, value] = induced_row(label, x, i);
      M(i, col) += v * value;
    }
  return M;
}

}  // namespace whf
