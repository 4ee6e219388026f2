#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "whf/plancherel.hpp"
#include "whf/random.hpp"

using namespace whf;

TEST_CASE("plancherel norm") {
  SUBCASE("delta at the identity has norm one for every L") {
    for (std::int64_t L = 1; L <= 8; ++L) {
      const GroupFunction f = GroupFunction::delta(GroupElement::identity(L));
      CHECK(std::abs(plancherel_norm(f, QuadratureSpec{2, 2}) - 1.0) < 1e-13);
    }
  }

  SUBCASE("delta at any point has norm one") {
    Rng rng(81);
    for (std::int64_t L : {2, 3, 6}) {
      const GroupElement x = random_group_element(L, 3, rng);
      const GroupFunction f = GroupFunction::delta(x);
      CHECK(std::abs(plancherel_norm(f, default_quadrature(f)) - 1.0) < 1e-13);
    }
  }

  SUBCASE("matches the l2 norm on random functions") {
    Rng rng(83);
    for (std::int64_t L : {2, 3, 4}) {
      const GroupFunction f = random_group_function(L, 2, 2, rng);
      const double lhs = f.l2_norm_sq();
      const double rhs = plancherel_norm(f, default_quadrature(f));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * lhs);
    }
  }

  SUBCASE("quadratic in the function") {
    Rng rng(87);
    GroupFunction f = random_group_function(3, 1, 1, rng);
    GroupFunction cf(3);
    const cplx c(1.25, -0.5);
    for (const auto& [x, v] : f.entries()) cf.set(x, c * v);
    const QuadratureSpec quad = default_quadrature(f);
    CHECK(std::abs(plancherel_norm(cf, quad) -
                   std::norm(c) * plancherel_norm(f, quad)) <=
          1e-12 * plancherel_norm(cf, quad));
  }

  SUBCASE("already exact: refinement changes nothing") {
    Rng rng(89);
    const GroupFunction f = random_group_function(4, 2, 2, rng);
    const QuadratureSpec quad = default_quadrature(f);
    const QuadratureSpec fine{2 * quad.q1, 2 * quad.q2};
    const double coarse_value = plancherel_norm(f, quad);
    CHECK(std::abs(coarse_value - plancherel_norm(f, fine)) <=
          1e-12 * coarse_value);
  }

  SUBCASE("refuses quadrature below the support bound") {
    Rng rng(91);
    const GroupFunction f = random_group_function(2, 3, 2, rng);
    try {
      plancherel_norm(f, QuadratureSpec{7, 6});  // needs q1 >= 8, q2 >= 6
      FAIL("expected QuadratureTooCoarse");
    } catch (const QuadratureTooCoarse& e) {
      CHECK(e.required_q1 == 8);
      CHECK(e.required_q2 == 6);
    }
  }
}

TEST_CASE("verify_plancherel") {
  SUBCASE("delta certificate") {
    for (std::int64_t L = 1; L <= 8; ++L) {
      const GroupFunction f = GroupFunction::delta(GroupElement::identity(L));
      const PlancherelReport rep = verify_plancherel(f, QuadratureSpec{2, 2}, 1e-12);
      CHECK(rep.pass);
      CHECK(rep.lhs == doctest::Approx(1.0));
    }
  }

  SUBCASE("N-supported functions against the abelian character sum") {
    Rng rng(93);
    for (std::int64_t L : {2, 3, 4}) {
      GroupFunction f(L);
      for (std::int64_t n = -2; n <= 2; ++n)
        for (std::int64_t k = -2; k <= 2; ++k)
          for (std::int64_t l = 0; l < L; ++l)
            f.set(GroupElement(n * L, k, l, L), rng.complex_symmetric());
      const double l2 = f.l2_norm_sq();
      const double full = plancherel_norm(f, default_quadrature(f));
      const double abelian = test::abelian_plancherel_oracle(f, 6, 6);
      CHECK(std::abs(full - l2) <= 1e-10 * l2);
      CHECK(std::abs(abelian - l2) <= 1e-10 * l2);
      CHECK(std::abs(full - abelian) <= 1e-10 * l2);
    }
  }

  SUBCASE("random function, L = 6, support box (3, 3)") {
    Rng rng(97);
    const GroupFunction f = random_group_function(6, 3, 3, rng);
    const PlancherelReport rep = verify_plancherel(f, default_quadrature(f), 1e-8);
    CHECK(rep.pass);
    CHECK(rep.discrepancy <= 1e-8 * rep.lhs);
  }
}

TEST_CASE("fiber restriction") {
  Rng rng(103);

  SUBCASE("L = 1 fibers are single Zak values") {
    const GaborLattice lat(2, 3, 1);
    const ZakGrid Z = zak_forward(random_signal(lat, rng));
    const FiberVector v = fiber_restrict(Z, 1, 2);
    REQUIRE(v.values.size() == 1);
    CHECK(v.values[0] == Z.values(1, 2));
    CHECK(v.omega1 == doctest::Approx(0.5));
    CHECK(v.omega2 == doctest::Approx(2.0 / 3.0));
  }

  SUBCASE("fibers partition the grid") {
    const GaborLattice lat(2, 8, 4);
    const ZakGrid Z = zak_forward(random_signal(lat, rng));
    double total = 0.0;
    for (std::int64_t r = 0; r < lat.a; ++r)
      for (std::int64_t s0 = 0; s0 < lat.q / lat.L; ++s0)
        total += fiber_restrict(Z, r, s0).norm_sq();
    CHECK(total == doctest::Approx(Z.norm_sq()).epsilon(1e-12));
  }

  SUBCASE("tight windows have fiber mass 1/a everywhere") {
    const GaborLattice lat(2, 8, 4);
    const ZakGrid Z = zak_forward(tighten(random_signal(lat, rng)));
    for (std::int64_t r = 0; r < lat.a; ++r)
      for (std::int64_t s0 = 0; s0 < lat.q / lat.L; ++s0)
        CHECK(fiber_restrict(Z, r, s0).norm_sq() ==
              doctest::Approx(1.0 / double(lat.a)).epsilon(1e-10));
  }

  SUBCASE("index bounds") {
    const GaborLattice lat(2, 8, 4);
    const ZakGrid Z = zak_forward(Signal::delta(lat));
    CHECK_THROWS_AS(fiber_restrict(Z, 2, 0), InvalidArgument);
    CHECK_THROWS_AS(fiber_restrict(Z, 0, 2), InvalidArgument);  // q/L = 2
  }
}

TEST_CASE("fiber action") {
  Rng rng(107);

  SUBCASE("identity, and the commuting square with pihat") {
    for (const GaborLattice lat :
         {GaborLattice(2, 4, 2), GaborLattice(2, 6, 3), GaborLattice(3, 12, 4)}) {
      const ZakGrid Z = zak_forward(random_signal(lat, rng));
      for (int trial = 0; trial < 10; ++trial) {
        const GroupElement x = random_group_element(lat.L, 20, rng);
        const ZakGrid Zx = pihat_action(x, Z);
        const std::int64_t r = rng.integer(lat.a);
        const std::int64_t s0 = rng.integer(lat.q / lat.L);
        const FiberVector direct = fiber_restrict(Zx, r, s0);
        const FiberVector via_fiber = fiber_action(x, fiber_restrict(Z, r, s0));
        CHECK(test::max_abs_diff(direct.values, via_fiber.values) < 1e-12 * 32);
        const FiberVector same =
            fiber_action(GroupElement::identity(lat.L), fiber_restrict(Z, r, s0));
        CHECK(test::max_abs_diff(same.values, fiber_restrict(Z, r, s0).values) ==
              0.0);
      }
    }
  }

  SUBCASE("N acts on the delta fiber by a character") {
    Rng local(5);
    for (std::int64_t L : {2, 3, 4, 6}) {
      FiberVector v;
      v.omega1 = local.unit();
      v.omega2 = local.unit() / double(L);
      v.L = L;
      v.values = Eigen::VectorXcd::Zero(L);
      v.values[0] = cplx(1, 0);
      for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t n = local.integer(9) - 4;
        const GroupElement x(n * L, local.integer(9) - 4, local.integer(L), L);
        const FiberVector out = fiber_action(x, v);
        // e^{2 pi i l / L} e^{2 pi i n omega1} e^{-2 pi i k omega2}; the
        // translation character shows up at -omega2
        const cplx expected =
            unit_phase(x.l, L) * unit_phase(double(n) * v.omega1) *
            unit_phase(-double(x.k) * v.omega2);
        CHECK(std::abs(out.values[0] - expected) < 1e-12);
        double reflected = -v.omega2 - std::floor(-v.omega2);
        const Character chi{v.omega1, reflected, floor_mod(1, L)};
        CHECK(std::abs(out.values[0] - chi_eval(chi, x)) < 1e-12);
        for (std::int64_t i = 1; i < L; ++i) CHECK(std::abs(out.values[i]) == 0.0);
      }
    }
  }

  SUBCASE("mismatched L") {
    FiberVector v;
    v.L = 2;
    v.values = Eigen::VectorXcd::Zero(2);
    CHECK_THROWS_AS(fiber_action(GroupElement(0, 0, 0, 3), v), InvalidArgument);
  }
}

TEST_CASE("fiber irreducibility certificates") {
  SUBCASE("matched label reflects omega2 across the fiber spacing") {
    const IrrepLabel l1 = fiber_irrep_label(0.3, 0.0, 4);
    CHECK(l1.j == 1);
    CHECK(l1.omega2 == 0.0);
    const IrrepLabel l2 = fiber_irrep_label(0.3, 1.0 / 8.0, 4);
    CHECK(l2.omega2 == doctest::Approx(1.0 / 8.0));  // self-dual point
    const IrrepLabel l3 = fiber_irrep_label(0.3, 1.0 / 16.0, 4);
    CHECK(l3.omega2 == doctest::Approx(3.0 / 16.0));
  }

  SUBCASE("L = 1 is the trivial one-dimensional case") {
    for (double omega2 : {0.0, 0.25, 0.5}) {
      const FiberIrrepReport rep = verify_fiber_irrep(0.37, omega2, 1);
      CHECK(rep.pass);
      CHECK(rep.residual < 1e-12);
    }
  }

  SUBCASE("L = 2 at a generic point") {
    const FiberIrrepReport rep = verify_fiber_irrep(1.0 / 3.0, 1.0 / 5.0, 2);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-10);
    CHECK(rep.label_omega2 == doctest::Approx(0.5 - 0.2));
    CHECK(rep.unitarity_defect <= 1e-12);
  }

  SUBCASE("L = 4 on and off the fiber grid") {
    for (double omega2 : {0.0, 1.0 / 16.0, 1.0 / 8.0, 3.0 / 16.0, 0.21 / 4.0}) {
      for (double omega1 : {0.0, 0.5, 0.73}) {
        const FiberIrrepReport rep = verify_fiber_irrep(omega1, omega2, 4);
        CHECK(rep.pass);
        CHECK(rep.residual <= 1e-10);
      }
    }
  }

  SUBCASE("mismatched labels admit no unitary intertwiner") {
    const std::int64_t L = 3;
    const double omega1 = 0.2, omega2 = 0.1;
    std::vector<Eigen::MatrixXcd> fiber_side, induced_side;
    const IrrepLabel wrong(L, 1, 0, omega1 + 0.37, fiber_irrep_label(omega1, omega2, L).omega2);
    for (const GroupElement& x :
         {GroupElement(1, 0, 0, L), GroupElement(0, 1, 0, L), GroupElement(0, 0, 1, L)}) {
      fiber_side.push_back(fiber_action_matrix(x, omega1, omega2, L));
      induced_side.push_back(induced_rep_matrix(wrong, x));
    }
    CHECK(unitary_intertwiner_residual(fiber_side, induced_side) > 0.1);
  }
}
