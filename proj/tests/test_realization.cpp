#include <memory>

#include "doctest.h"
#include "imverma/realization.hpp"
#include "imverma/sampling.hpp"
#include "imverma/sweeps.hpp"
#include "oracles.hpp"

using namespace imverma;

namespace {

std::shared_ptr<const InducingModule> share(InducingModule V) {
  return std::make_shared<const InducingModule>(std::move(V));
}

FockState b_state(int alpha, int mode, const VBasis& v = VBasis{}) {
  return FockState::basis(StateKey{Monomial::from_vars({{alpha, mode, 1}}), v});
}

FockState from_vvector(const VVector& vv, const Monomial& mono = Monomial{}) {
  FockState out;
  for (const auto& [b, c] : vv) out.add(StateKey{mono, b}, c);
  return out;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Scalar(-1, 2));
  CHECK(bernoulli(2) == Scalar(1, 6));
  CHECK(bernoulli(3) == 0);
  const auto table = oracle::bernoulli_table(32);
  for (int k = 0; k <= 32; ++k) {
    CHECK(bernoulli(k) == table[k]);
    if (k >= 3 && k % 2 == 1) CHECK(bernoulli(k) == 0);
  }
  CHECK(bernoulli(12) == Scalar(-691, 2730));
  CHECK_THROWS_AS(bernoulli(33), std::out_of_range);
}

TEST_CASE("series_expand examples") {
  SUBCASE("ubar element with abelian ubar") {
    const auto pd = parabolic_decompose(2, {2});
    const auto f1 = pd.f_basis[0];
    const auto D = series_expand(f1, SeriesKind::D, pd);
    REQUIRE(D.size() == 1);
    CHECK(D[0].word.empty());
    CHECK(D[0].base == f1);
    CHECK(abs(D[0].coeff) == 1);
    CHECK(series_expand(f1, SeriesKind::A, pd).empty());
    CHECK(series_expand(f1, SeriesKind::C, pd).empty());
  }
  SUBCASE("levi element") {
    const auto pd = parabolic_decompose(2, {2});
    const auto h = parse_element("h", 2);
    const auto D = series_expand(h, SeriesKind::D, pd);
    for (const auto& t : D) CHECK(t.word.size() == 1);
    const auto A = series_expand(h, SeriesKind::A, pd);
    REQUIRE(A.size() == 1);
    CHECK(A[0].word.empty());
    CHECK(A[0].coeff * A[0].base == h);
    CHECK(series_expand(h, SeriesKind::C, pd).empty());
  }
  SUBCASE("sl(3) Borel, f_alpha1") {
    const auto pd = parabolic_decompose(2, {});
    const auto D = series_expand(pd.f_basis[0], SeriesKind::D, pd);
    REQUIRE(D.size() == 2);
    CHECK(D[0].word.empty());
    CHECK(D[0].base == pd.f_basis[0]);
    CHECK(D[0].coeff == -1);
    CHECK(D[1].word == std::vector<int>{1});
    CHECK(D[1].base == LieElement::unit(2, 3, 1));
    CHECK(D[1].coeff == Scalar(1, 2));
  }
  CHECK_THROWS_AS(series_expand(LieElement::unit(1, 1, 2) + LieElement::unit(1, 2, 1), SeriesKind::D,
                                parabolic_decompose(1, {})),
                  SemanticError);
}

TEST_CASE("sl(2) operators reproduce the closed forms") {
  const auto pd = parabolic_decompose(1, {});
  const auto e = parse_element("e", 1), f = parse_element("f", 1), h = parse_element("h", 1);
  const auto ge = build_operator_general(e, pd);
  CHECK(ge.dump() ==
        "1 * L[E_12](m)\n"
        "1 * [m] * x(0, n_1) * c [n_1 = -m]\n"
        "1 * x(0, n_1) * L[H_1](m + n_1)\n"
        "1 * x(0, n_1) * x(0, n_2) * b(0, m + n_1 + n_2)\n");
  CHECK(build_operator_general(f, pd).dump() == "-1 * b(0, m)\n");
  CHECK(build_operator_general(h, pd).dump() == "1 * L[H_1](m)\n2 * x(0, n_1) * b(0, m + n_1)\n");
  for (const auto& a : {e, f, h}) {
    CHECK(structurally_equal(build_operator_general(a, pd), build_operator_explicit_sl2(a, pd)));
    CHECK(structurally_equal(build_operator_explicit_sl(a, pd), build_operator_explicit_sl2(a, pd)));
  }
}

TEST_CASE("maximal parabolic operators") {
  for (int n = 2; n <= 3; ++n) {
    std::set<int> sigma;
    for (int i = 2; i <= n; ++i) sigma.insert(i);
    const auto pd = parabolic_decompose(n, sigma);
    for (int i = 0; i < n; ++i) {
      const auto op = build_operator_general(pd.f_basis[static_cast<std::size_t>(i)], pd);
      REQUIRE(op.terms.size() == 1);
      CHECK(op.terms[0].coeff == -1);
      CHECK(op.terms[0].annihilators.empty());
      CHECK(op.terms[0].head.kind == HeadKind::creator);
      CHECK(op.terms[0].head.alpha == i);
    }
    const auto h = parse_element("h", n);
    const auto op = build_operator_general(h, pd);
    int creators = 0, levis = 0;
    for (const auto& t : op.terms) {
      if (t.head.kind == HeadKind::creator) {
        ++creators;
        CHECK(t.coeff == Scalar(n + 1, n));
        REQUIRE(t.annihilators.size() == 1);
        CHECK(t.annihilators[0] == t.head.alpha);
      } else {
        ++levis;
        CHECK(t.head.kind == HeadKind::levi);
        CHECK(t.head.w == h);
      }
    }
    CHECK(creators == n);
    CHECK(levis == 1);
    for (const auto& [name, g] : explicit_generators(n)) {
      INFO(name);
      CHECK(structurally_equal(build_operator_general(g, pd), build_operator_explicit_sl(g, pd)));
    }
  }
}

TEST_CASE("apply examples on sl(2)") {
  const auto pd = parabolic_decompose(1, {});
  const auto e = parse_element("e", 1), f = parse_element("f", 1), h = parse_element("h", 1);
  for (const Scalar kappa : {Scalar(0), Scalar(1), Scalar(-3, 2)}) {
    const auto V = share(heisenberg_fock(pd, {Scalar(5, 2)}, kappa));
    Realization R(V, Engine::general);
    for (int n = -2; n <= 2; ++n) {
      for (int j = -2; j <= 2; ++j) {
        // pi(e_n)(b_j (x) v) = -1 (x) sigma(h_{j+n}) v - n kappa delta_{j,-n} (1 (x) v)
        FockState expected = Scalar(-1) * from_vvector(V->act(h, j + n, VBasis{}));
        if (j == -n) expected -= Scalar(n) * kappa * vacuum(0);
        CHECK(R.act(e, n, b_state(0, j)) == expected);
        // pi(h_n)(b_j (x) v) = -2 b_{n+j} (x) v + b_j (x) sigma(h_n) v
        FockState hexp = Scalar(-2) * b_state(0, n + j);
        hexp += from_vvector(V->act(h, n, VBasis{}), Monomial::from_vars({{0, j, 1}}));
        CHECK(R.act(h, n, b_state(0, j)) == hexp);
      }
      CHECK(R.act(e, n, FockState{}).is_zero());
    }
    CHECK(R.act_central(b_state(0, 2)) == kappa * b_state(0, 2));
    CHECK(R.act(LoopElement::central_element(1, Scalar(3)), vacuum(0)) == Scalar(3) * kappa * vacuum(0));
    CHECK(R.act(f, 0, vacuum(0)) == Scalar(-1) * b_state(0, 0));
    for (int m = -3; m <= 3; ++m) CHECK(R.act(e, m, vacuum(0)).is_zero());
  }
}

TEST_CASE("zero element gives the zero operator") {
  const auto pd = parabolic_decompose(2, {});
  CHECK(build_operator_general(LieElement(2), pd).terms.empty());
  Realization R(share(character_module(pd, {})), Engine::general);
  CHECK(R.act(LieElement(2), 1, b_state(1, 0)).is_zero());
}

TEST_CASE("check_bracket examples") {
  const auto pd = parabolic_decompose(1, {});
  const auto e = parse_element("e", 1), f = parse_element("f", 1), h = parse_element("h", 1);
  Realization R(share(heisenberg_fock(pd, {Scalar(1)}, Scalar(1))), Engine::general);
  for (int m = -3; m <= 3; ++m) CHECK(R.check_bracket(e, f, m, -m, vacuum(0)).pass);
  CHECK(R.check_bracket(h, h, 2, -2, vacuum(0)).pass);
  // The residual is computed against the central term, so dropping it must be visible.
  const FockState lhs = R.act(h, 2, R.act(h, -2, vacuum(0))) - R.act(h, -2, R.act(h, 2, vacuum(0)));
  CHECK(lhs == Scalar(4) * vacuum(0));
  Sampler s(5);
  for (int i = 0; i < 5; ++i) {
    const auto st = s.state(R.module(), 3, 3);
    CHECK(R.check_bracket(f, f, 1, -3, st).pass);
    CHECK(R.check_bracket(h, f, 2, 1, st).pass);
  }
}

TEST_CASE("pbw leading term") {
  const auto pd = parabolic_decompose(1, {});
  Realization R(share(character_module(pd, {})), Engine::general);
  CHECK(R.pbw_leading_check({}, VBasis{}));
  CHECK(R.pbw_leading_check({{0, LaurentPoly::monomial(0)}}, VBasis{}));
  LaurentPoly g;
  g.add(-1, 2);
  g.add(2, Scalar(1, 3));
  CHECK(R.pbw_leading_check({{0, g}, {0, LaurentPoly::monomial(1)}}, VBasis{}));

  const auto pd3 = parabolic_decompose(2, {});
  Realization R3(share(character_module(pd3, {})), Engine::general);
  CHECK(R3.pbw_leading_check({{0, LaurentPoly::monomial(0)}, {1, LaurentPoly::monomial(1)}}, VBasis{}));
  CHECK(R3.pbw_leading_check({{1, LaurentPoly::monomial(-1)}, {0, LaurentPoly::monomial(2)}}, VBasis{}));
  // The correction is of lower degree, so the top component is exactly the product.
  const FockState two = R3.act(pd3.f_basis[1], 1, R3.act(pd3.f_basis[0], 0, vacuum(0)));
  CHECK(pbw_degree(two - degree_component(two, 2)) <= 1);
}

TEST_CASE("vacuum property and grading") {
  const auto pd = parabolic_decompose(2, {});
  const auto h1 = LieElement::coroot(2, 1);
  const auto V = share(character_module(pd, {{h1, 0, Scalar(2)}, {LieElement::coroot(2, 2), 0, Scalar(-1, 3)}}));
  Realization R(V, Engine::general);
  for (const auto& x : pd.p_basis()) {
    for (int m = -3; m <= 3; ++m) CHECK(R.act(x, m, vacuum(0)) == from_vvector(V->act(x, m, VBasis{})));
  }
  Sampler s(9);
  auto vw = [&](const LieElement& hh) { return [&V, hh](const VBasis& v) { return *V->v_weight(v, hh); }; };
  const SlAlgebra alg = build_sl(2);
  for (int trial = 0; trial < 6; ++trial) {
    const FockState st = s.homogeneous_state(*V, 3, 3);
    for (const auto& a : alg.basis) {
      if (a.is_diagonal()) continue;
      const auto [i, j] = a.entries().begin()->first;
      for (int m = -2; m <= 2; ++m) {
        const FockState out = R.act(a, m, st);
        if (out.is_zero()) continue;
        CHECK(*total_mode(out) == *total_mode(st) + m);
        for (const auto& hh : {h1, LieElement::coroot(2, 2)}) {
          const Scalar shift = hh.entry(i, i) - hh.entry(j, j);
          CHECK(*h_weight(out, pd, hh, vw(hh)) == *h_weight(st, pd, hh, vw(hh)) + shift);
        }
      }
    }
  }
}

TEST_CASE("sign flip injection breaks the sweep") {
  const auto pd = parabolic_decompose(1, {});
  Realization R(share(heisenberg_fock(pd, {Scalar(1)}, Scalar(1))), Engine::general);
  const auto states = sample_states(R.module(), 1, 4, 3, 2);
  CHECK(bracket_sweep(R, 2, states).pass());
  const auto h = parse_element("h", 1);
  // Term 1 of pi(h) is the creator term 2 x b.
  R.inject_sign_flip(h, 1);
  const auto bad = bracket_sweep(R, 2, states);
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(bad.witness.empty());
  R.clear_injections();
  CHECK(bracket_sweep(R, 2, states).pass());
}
