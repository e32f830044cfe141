#include "doctest.h"
#include "imverma/lie.hpp"
#include "oracles.hpp"

using namespace imverma;

namespace {

oracle::Dense to_dense(const LieElement& x) {
  oracle::Dense d = oracle::zeros(x.size());
  for (const auto& [ij, v] : x.entries()) d[ij.first - 1][ij.second - 1] = v;
  return d;
}

}  // namespace

TEST_CASE("build_sl dimensions and ordering") {
  CHECK(build_sl(1).dim() == 3);
  CHECK(build_sl(2).dim() == 8);
  CHECK(build_sl(3).dim() == 15);
  const SlAlgebra a = build_sl(1);
  CHECK(a.basis[0] == parse_element("e", 1));
  CHECK(a.basis[1] == parse_element("h", 1));
  CHECK(a.basis[2] == parse_element("f", 1));
  CHECK_THROWS_AS(build_sl(0), std::length_error);
  CHECK_THROWS_AS(build_sl(kMaxRank + 1), std::length_error);
}

TEST_CASE("bracket examples") {
  CHECK(bracket(LieElement::unit(1, 1, 2), LieElement::unit(1, 2, 1)) == LieElement::coroot(1, 1));
  const auto h = parse_element("h", 1), e = parse_element("e", 1);
  CHECK(bracket(h, e) == Scalar(2) * e);
  CHECK(bracket(LieElement::unit(2, 3, 2), LieElement::unit(2, 2, 1)) == LieElement::unit(2, 3, 1));
  CHECK_THROWS(bracket(LieElement::unit(1, 1, 2), LieElement::unit(2, 1, 2)));
}

TEST_CASE("bracket agrees with dense matrix multiplication") {
  for (int n = 1; n <= 3; ++n) {
    const SlAlgebra alg = build_sl(n);
    for (const auto& a : alg.basis) {
      for (const auto& b : alg.basis) {
        CHECK(to_dense(bracket(a, b)) == oracle::commutator(to_dense(a), to_dense(b)));
      }
    }
  }
}

TEST_CASE("form examples") {
  const auto e = parse_element("e", 1), f = parse_element("f", 1), h = parse_element("h", 1);
  CHECK(form(e, f) == 1);
  CHECK(form(h, h) == 2);
  CHECK(form(e, e) == 0);
  for (int n = 1; n <= 5; ++n) {
    // (theta, theta) = 2 through the coroot of theta.
    const auto hth = LieElement::unit(n, 1, 1 + n);
    const auto fth = LieElement::unit(n, 1 + n, 1);
    CHECK(form(bracket(hth, fth), bracket(hth, fth)) == 2);
  }
}

TEST_CASE("killing form equals 2(n+1) times the trace form") {
  const auto e = parse_element("e", 1), f = parse_element("f", 1), h = parse_element("h", 1);
  CHECK(killing_form(e, f) == 4);
  CHECK(killing_form(h, h) == 8);
  CHECK(oracle::killing(to_dense(e), to_dense(f)) == 4);
  for (int n = 1; n <= 3; ++n) {
    const SlAlgebra alg = build_sl(n);
    for (const auto& a : alg.basis) {
      for (const auto& b : alg.basis) {
        const Scalar k = killing_form(a, b);
        CHECK(k == Scalar(2 * (n + 1)) * form(a, b));
        CHECK(k == oracle::killing(to_dense(a), to_dense(b)));
      }
    }
  }
}

TEST_CASE("Jacobi identity and invariance on basis triples") {
  for (int n = 1; n <= 3; ++n) {
    const SlAlgebra alg = build_sl(n);
    for (const auto& x : alg.basis) {
      for (const auto& a : alg.basis) {
        for (const auto& b : alg.basis) {
          const LieElement jac = bracket(x, bracket(a, b)) + bracket(a, bracket(b, x)) + bracket(b, bracket(x, a));
          CHECK(jac.is_zero());
          CHECK(form(bracket(x, a), b) == -form(a, bracket(x, b)));
        }
      }
    }
  }
}

TEST_CASE("parabolic_decompose examples") {
  const auto p1 = parabolic_decompose(1, {});
  REQUIRE(p1.num_roots() == 1);
  CHECK(p1.delta_u[0] == Root{1, 2});
  CHECK(p1.depth == 1);

  const auto p2 = parabolic_decompose(2, {2});
  REQUIRE(p2.num_roots() == 2);
  CHECK(p2.delta_u[0] == Root{1, 2});
  CHECK(p2.delta_u[1] == Root{1, 3});
  CHECK(p2.depth == 1);
  CHECK(bracket(p2.f_basis[0], p2.f_basis[1]).is_zero());

  const auto p3 = parabolic_decompose(2, {});
  REQUIRE(p3.num_roots() == 3);
  CHECK(p3.delta_u[2] == Root{1, 3});
  CHECK(p3.depth == 2);
  CHECK_THROWS_AS(parabolic_decompose(2, {3}), SemanticError);
}

TEST_CASE("parabolic data invariants") {
  for (int n = 1; n <= 4; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::set<int> sigma;
      for (int i = 1; i <= n; ++i) {
        if (mask & (1u << (i - 1))) sigma.insert(i);
      }
      const auto pd = parabolic_decompose(n, sigma);
      CHECK(pd.levi_basis.size() + 2 * pd.num_roots() == static_cast<std::size_t>((n + 1) * (n + 1) - 1));
      for (std::size_t a = 0; a < pd.num_roots(); ++a) {
        CHECK(pd.degree(pd.f_basis[a]).value() < 0);
        CHECK(pd.degree(pd.e_basis[a]).value() > 0);
      }
      if (sigma.size() < static_cast<std::size_t>(n)) CHECK(pd.depth >= 1);
    }
  }
}

TEST_CASE("project examples and reconstruction") {
  const auto p1 = parabolic_decompose(1, {});
  CHECK(p1.project(LieElement::unit(1, 2, 1), Part::ubar) == LieElement::unit(1, 2, 1));
  CHECK(p1.project(LieElement::coroot(1, 1), Part::ubar).is_zero());
  const auto p2 = parabolic_decompose(2, {2});
  const auto x = LieElement::unit(2, 1, 3) + LieElement::unit(2, 3, 1);
  CHECK(p2.project(x, Part::p) == LieElement::unit(2, 1, 3));

  const auto pd = parabolic_decompose(3, {2});
  const SlAlgebra alg = build_sl(3);
  LieElement y(3);
  for (std::size_t k = 0; k < alg.dim(); ++k) y += Scalar(static_cast<long>(k) + 1, 3) * alg.basis[k];
  const auto ub = pd.project(y, Part::ubar), l = pd.project(y, Part::levi), u = pd.project(y, Part::u);
  CHECK(ub + l + u == y);
  CHECK(pd.project(ub, Part::ubar) == ub);
  CHECK(pd.project(y, Part::p) == l + u);
}

TEST_CASE("grading is additive and ad of ubar is nilpotent") {
  const auto pd = parabolic_decompose(3, {});
  const SlAlgebra alg = build_sl(3);
  for (const auto& a : alg.basis) {
    for (const auto& b : alg.basis) {
      const auto c = bracket(a, b);
      if (c.is_zero()) continue;
      CHECK(pd.degree(c).value() == pd.degree(a).value() + pd.degree(b).value());
    }
  }
  LieElement x(3);
  for (const auto& f : pd.f_basis) x += f;
  for (const auto& y : alg.basis) {
    LieElement z = y;
    for (int k = 0; k < 2 * pd.depth + 1; ++k) z = bracket(x, z);
    CHECK(z.is_zero());
  }
}

TEST_CASE("loop_bracket examples and identities") {
  const auto e = parse_element("e", 1), f = parse_element("f", 1), h = parse_element("h", 1);
  for (int m = -3; m <= 3; ++m) {
    const auto r = loop_bracket(LoopElement::mode(e, m), LoopElement::mode(f, -m));
    CHECK(r == LoopElement::mode(h, 0) + LoopElement::central_element(1, Scalar(m)));
  }
  CHECK(loop_bracket(LoopElement::mode(h, 2), LoopElement::mode(h, -2)) == LoopElement::central_element(1, Scalar(4)));
  CHECK(loop_bracket(LoopElement::central_element(1), LoopElement::mode(e, 5)).is_zero());

  const SlAlgebra alg = build_sl(2);
  for (std::size_t i = 0; i < alg.dim(); i += 2) {
    for (std::size_t j = 1; j < alg.dim(); j += 3) {
      for (std::size_t k = 0; k < alg.dim(); k += 3) {
        for (int m = -4; m <= 4; m += 2) {
          const auto x = LoopElement::mode(alg.basis[i], m);
          const auto y = LoopElement::mode(alg.basis[j], -m + 1);
          const auto z = LoopElement::mode(alg.basis[k], -1);
          CHECK((loop_bracket(x, y) + loop_bracket(y, x)).is_zero());
          const auto jac = loop_bracket(x, loop_bracket(y, z)) + loop_bracket(y, loop_bracket(z, x)) +
                           loop_bracket(z, loop_bracket(x, y));
          CHECK(jac.is_zero());
        }
      }
    }
  }
}

TEST_CASE("parse_element") {
  CHECK(parse_element("2*E_12 - 1/2*H_1", 1) == Scalar(2) * LieElement::unit(1, 1, 2) - Scalar(1, 2) * LieElement::coroot(1, 1));
  CHECK(parse_element("E_1_10", 9) == LieElement::unit(9, 1, 10));
  CHECK(parse_element("hA_12", 2) == LieElement::unit(2, 2, 3));
  CHECK_THROWS_AS(parse_element("Q_1", 2), ParseError);
  CHECK_THROWS_AS(parse_element("f_3", 2), SemanticError);
  CHECK_THROWS_AS(parse_scalar("0.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK(to_string(parse_scalar("-4/6")) == "-2/3");
}
