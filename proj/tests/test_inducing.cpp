#include "doctest.h"
#include "imverma/inducing.hpp"
#include "imverma/sampling.hpp"

using namespace imverma;

namespace {

VVector scaled(const VBasis& b, const Scalar& c) {
  VVector out;
  add_to(out, b, c);
  return out;
}

std::vector<VBasis> sample_vs(const InducingModule& V, std::uint32_t seed, int count) {
  Sampler s(seed);
  std::vector<VBasis> out;
  for (int i = 0; i < count; ++i) out.push_back(s.v_basis(V));
  return out;
}

}  // namespace

TEST_CASE("character module on sl(2)") {
  const auto pd = parabolic_decompose(1, {});
  const auto h = parse_element("h", 1);
  const Scalar lambda(3, 2), mu(-5);
  const auto V = character_module(pd, {{h, 0, lambda}, {h, 1, mu}});
  CHECK(V.dim() == 1);
  CHECK(V.act(h, 0, VBasis{}) == scaled(VBasis{}, lambda));
  CHECK(V.act(h, 1, VBasis{}) == scaled(VBasis{}, mu));
  CHECK(V.act(h, 3, VBasis{}).empty());
  CHECK(V.act(parse_element("e", 1), 0, VBasis{}).empty());
  CHECK_THROWS_AS(V.act(parse_element("f", 1), 0, VBasis{}), SemanticError);
  CHECK(V.mode_graded() == false);
  CHECK(character_module(pd, {{h, 0, lambda}}).mode_graded());
}

TEST_CASE("character module rejects [l,l] directions and nonzero level") {
  const auto pd = parabolic_decompose(2, {2});
  CHECK_THROWS_AS(character_module(pd, {{LieElement::unit(2, 2, 3), 0, Scalar(1)}}), SemanticError);
  CHECK_THROWS_AS(character_module(pd, {{LieElement::coroot(2, 2), 0, Scalar(1)}}), SemanticError);
  CHECK_NOTHROW(character_module(pd, {{LieElement::unit(2, 2, 3), 0, Scalar(0)}}));
  CHECK_THROWS_AS(character_module(parabolic_decompose(1, {}), {}, Scalar(1)), SemanticError);
  // The central direction diag(2, -1, -1) is accepted; on [l,l] the functional vanishes.
  const auto z = LieElement::diagonal(2, {Scalar(2), Scalar(-1), Scalar(-1)});
  const auto V = character_module(pd, {{z, 0, Scalar(6)}});
  CHECK(V.act(z, 0, VBasis{}) == scaled(VBasis{}, Scalar(6)));
  CHECK(V.act(LieElement::coroot(2, 2), 0, VBasis{}).empty());
  CHECK(V.act(LieElement::coroot(2, 1), 0, VBasis{}) == scaled(VBasis{}, Scalar(3)));
}

TEST_CASE("evaluation module") {
  const auto pd = parabolic_decompose(2, {2});
  SUBCASE("trivial representation") {
    std::vector<Matrix> zero(pd.levi_basis.size(), Matrix{{Scalar(0)}});
    const auto V = evaluation_module(pd, zero, Scalar(7));
    for (const auto& x : pd.levi_basis) {
      for (int j = -3; j <= 3; ++j) CHECK(V.act(x, j, VBasis{}).empty());
    }
  }
  SUBCASE("natural block at s = 1") {
    const auto rho = block_natural_rep_at(pd, 2);
    const auto V = evaluation_module(pd, rho, Scalar(1));
    REQUIRE(V.dim() == 2);
    const auto e23 = LieElement::unit(2, 2, 3);
    for (int j = -3; j <= 3; ++j) {
      CHECK(V.act(e23, j, VBasis{1, {}}) == scaled(VBasis{0, {}}, Scalar(1)));
      CHECK(V.act(e23, j, VBasis{0, {}}).empty());
    }
    const auto report = axiom_check(V, 2, {VBasis{0, {}}, VBasis{1, {}}});
    CHECK(report.pass);
    CHECK(report.checks > 0);
  }
  SUBCASE("s^j scaling") {
    const auto V = evaluation_module(pd, block_natural_rep_at(pd, 2), Scalar(2));
    CHECK(V.act(LieElement::unit(2, 2, 3), -2, VBasis{1, {}}) == scaled(VBasis{0, {}}, Scalar(1, 4)));
  }
  SUBCASE("nonzero level is unconstructible") {
    CHECK_THROWS_AS(evaluation_module(pd, block_natural_rep_at(pd, 2), Scalar(1), Scalar(1)), SemanticError);
    CHECK_THROWS_AS(evaluation_module_unchecked(pd, block_natural_rep_at(pd, 2), Scalar(1), Scalar(-2)),
                    SemanticError);
  }
  SUBCASE("corrupted rho") {
    auto rho = block_natural_rep_at(pd, 2);
    // Double the matrix of E_23 (a Levi root vector).
    std::size_t k = 0;
    while (!(pd.levi_basis[k] == LieElement::unit(2, 2, 3))) ++k;
    for (auto& row : rho[k]) {
      for (auto& v : row) v *= 2;
    }
    CHECK_THROWS_AS(evaluation_module(pd, rho, Scalar(1)), SemanticError);
    const auto bad = evaluation_module_unchecked(pd, rho, Scalar(1));
    const auto report = axiom_check(bad, 2, {VBasis{0, {}}, VBasis{1, {}}});
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.witness.empty());
  }
  SUBCASE("evaluation at s = 0") {
    const auto V = evaluation_module(pd, block_natural_rep_at(pd, 2), Scalar(0));
    CHECK_THROWS_AS(V.act(LieElement::unit(2, 2, 3), -1, VBasis{1, {}}), SemanticError);
    CHECK(V.act(LieElement::unit(2, 2, 3), 2, VBasis{1, {}}).empty());
    CHECK(V.act(LieElement::unit(2, 2, 3), 0, VBasis{1, {}}) == scaled(VBasis{0, {}}, Scalar(1)));
  }
}

TEST_CASE("heisenberg fock module") {
  const auto pd = parabolic_decompose(1, {});
  const auto h = LieElement::coroot(1, 1);
  const Scalar lambda(4, 3);
  const auto V = heisenberg_fock(pd, {lambda}, Scalar(1));
  const VBasis vac{};
  const VBasis one{0, Monomial::from_vars({{0, -1, 1}})};
  CHECK(V.act(h, 1, one) == scaled(vac, Scalar(2)));
  CHECK(V.act(h, 2, vac).empty());
  CHECK(V.act(h, 0, one) == scaled(one, lambda));
  CHECK(V.act(h, -1, vac) == scaled(one, Scalar(1)));
  CHECK_FALSE(V.dim().has_value());
  CHECK(V.mode_graded());
  CHECK_THROWS_AS(heisenberg_fock(parabolic_decompose(2, {2}), {Scalar(0), Scalar(0)}, Scalar(1)), SemanticError);

  // [h_1, h_{-1}] = (h,h) kappa = 2 on every sample vector, matching the loop bracket.
  const auto V2 = heisenberg_fock(pd, {lambda}, Scalar(2));
  const auto sl3 = parabolic_decompose(2, {});
  const auto V3 = heisenberg_fock(sl3, {Scalar(1), Scalar(-1, 2)}, Scalar(-3, 2));
  CHECK(axiom_check(V2, 3, sample_vs(V2, 3, 20)).pass);
  CHECK(axiom_check(V3, 3, sample_vs(V3, 4, 20)).pass);
}

TEST_CASE("axiom_check passes for every kind on 20 random vectors at N = 3") {
  const auto b2 = parabolic_decompose(1, {});
  const auto sl3max = parabolic_decompose(2, {2});
  const auto sl4 = parabolic_decompose(3, {2, 3});
  const auto char_sl2 = character_module(b2, {{LieElement::coroot(1, 1), 0, Scalar(1, 2)}});
  const auto char_sl4 = character_module(sl4, {{LieElement::diagonal(3, {Scalar(3), Scalar(-1), Scalar(-1), Scalar(-1)}), -1, Scalar(2)}});
  const auto eval = evaluation_module(sl3max, block_natural_rep_at(sl3max, 3), Scalar(-2, 3));
  const auto eval4 = evaluation_module(sl4, block_natural_rep_at(sl4, 2), Scalar(1));
  const auto heis = heisenberg_fock(b2, {Scalar(2)}, Scalar(-3, 2));
  for (const InducingModule* V : {&char_sl2, &char_sl4, &eval, &eval4, &heis}) {
    const auto report = axiom_check(*V, 3, sample_vs(*V, 11, 20));
    INFO(V->describe() << " " << report.witness);
    CHECK(report.pass);
  }
}
