#include "doctest.h"
#include "imverma/formal_dist.hpp"

using namespace imverma;

TEST_CASE("multiply_by_field") {
  LaurentPoly a;
  a.add(3, 1);
  a.add(-1, 2);
  a.add(0, Scalar(-1, 2));
  DeltaKernel expected0;
  expected0.add(0, a);
  CHECK(multiply_by_field(DeltaKernel::delta(0), a) == expected0);

  DeltaKernel expected1;
  expected1.add(1, a);
  expected1.add(0, a.derivative());
  CHECK(multiply_by_field(DeltaKernel::delta(1), a) == expected1);

  CHECK(multiply_by_field(DeltaKernel::delta(0), LaurentPoly::monomial(0)) == DeltaKernel::delta(0));

  // Order 2: a d^2 delta = a d^2 delta + 2 a' d delta + a'' delta.
  DeltaKernel expected2;
  expected2.add(2, a);
  expected2.add(1, Scalar(2) * a.derivative());
  expected2.add(0, a.derivative().derivative());
  CHECK(multiply_by_field(DeltaKernel::delta(2), a) == expected2);
}

TEST_CASE("annihilation_check") {
  CHECK(annihilation_check(DeltaKernel::delta(0), 1));
  CHECK(annihilation_check(DeltaKernel::delta(1), 2));
  CHECK_FALSE(annihilation_check(DeltaKernel::delta(1), 1));
  CHECK(multiply_by_z_minus_w(DeltaKernel::delta(1)) == DeltaKernel::delta(0));
  for (int n = 0; n <= 6; ++n) {
    CHECK(annihilation_check(DeltaKernel::delta(n), n + 1));
    CHECK_FALSE(annihilation_check(DeltaKernel::delta(n), n));
  }
  CHECK_THROWS_AS(annihilation_check(DeltaKernel::delta(0), -1), SemanticError);
}

TEST_CASE("residue_pair") {
  LaurentPoly a;
  a.add(3, 1);
  a.add(-1, 2);
  CHECK(residue_pair(DeltaKernel::delta(0), a) == a);
  for (int m = -8; m <= 8; ++m) {
    CHECK(residue_pair(DeltaKernel::delta(1), LaurentPoly::monomial(m)) == LaurentPoly::monomial(m - 1, Scalar(m)));
  }
  CHECK(residue_pair(DeltaKernel::delta(0), LaurentPoly{}).is_zero());
}

TEST_CASE("residue of a(z) delta recovers a on the window [-6, 6]") {
  LaurentPoly a;
  for (int k = -6; k <= 6; ++k) {
    Scalar c(k * k + 1, 7 - k);
    c.canonicalize();
    a.add(k, c);
  }
  CHECK(residue_pair(multiply_by_field(DeltaKernel::delta(0), a), LaurentPoly::monomial(0)) == a);
  // Series route on the truncated bilateral expansion.
  CHECK(BilateralWindow::delta_series(20).times_z(a).residue_z() == a);
}

TEST_CASE("delta symmetry and derivative identities on the series window") {
  const int r = 8;
  CHECK(BilateralWindow::delta_series(r + 4).restrict(r, r) == BilateralWindow::delta_series(r + 4, true).restrict(r, r));
  auto dz = BilateralWindow::delta_series(r + 4).d_dz().restrict(r, r);
  auto dw = BilateralWindow::delta_series(r + 4).d_dw();
  for (auto& kv : dw.coeffs) kv.second = -kv.second;
  CHECK(dz == dw.restrict(r, r));
}

TEST_CASE("delta_selftest passes all six identities") {
  const auto checks = delta_selftest(8);
  REQUIRE(checks.size() == 6);
  for (const auto& c : checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
}
