#include "imverma/sampling.hpp"

namespace imverma {

int Sampler::uniform(int lo, int hi) {
  const auto range = static_cast<std::uint32_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % range);
}

Scalar Sampler::small_rational() {
  int p = uniform(-3, 2);
  if (p >= 0) ++p;
  Scalar r(p, uniform(1, 3));
  r.canonicalize();
  return r;
}

Monomial Sampler::monomial(const ParabolicData& pd, int max_degree, int max_mode) {
  const int degree = uniform(0, max_degree);
  const int families = static_cast<int>(pd.num_roots());
  std::vector<Var> vars;
  for (int i = 0; i < degree; ++i) {
    vars.push_back(Var{uniform(0, families - 1), uniform(-max_mode, max_mode), 1});
  }
  return Monomial::from_vars(std::move(vars));
}

VBasis Sampler::v_basis(const InducingModule& V) {
  VBasis v;
  if (V.kind() == ModuleKind::heisenberg_fock) {
    const int degree = uniform(0, 2);
    std::vector<Var> vars;
    for (int i = 0; i < degree; ++i) vars.push_back(Var{uniform(0, V.parabolic().n - 1), uniform(-3, -1), 1});
    v.heis = Monomial::from_vars(std::move(vars));
  } else {
    v.index = uniform(0, *V.dim() - 1);
  }
  return v;
}

FockState Sampler::state(const InducingModule& V, int max_degree, int max_mode) {
  FockState s;
  const int terms = uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    const Scalar c = small_rational();
    Monomial mono = monomial(V.parabolic(), max_degree, max_mode);
    s.add(StateKey{std::move(mono), v_basis(V)}, c);
  }
  return s;
}

FockState Sampler::homogeneous_state(const InducingModule& V, int max_degree, int max_mode) {
  const Scalar c = small_rational();
  Monomial mono = monomial(V.parabolic(), max_degree, max_mode);
  return FockState::basis(StateKey{std::move(mono), v_basis(V)}, c);
}

}  // namespace imverma
