#pragma once

#include <cstdint>
#include <random>

#include "imverma/fock.hpp"
#include "imverma/inducing.hpp"

namespace imverma {

/// Deterministic sampler on std::minstd_rand (Lehmer LCG, a = 48271,
/// m = 2^31 - 1). Ranges are mapped with a plain modulus so that the stream
/// of states is reproducible across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed == 0 ? 1u : seed) {}

  /// Uniform-ish integer in [lo, hi].
  int uniform(int lo, int hi);
  /// p/q with p in [-3, 3] \ {0}, q in [1, 3].
  Scalar small_rational();

  /// Random monomial of degree <= max_degree over the families of pd.
  Monomial monomial(const ParabolicData& pd, int max_degree, int max_mode);
  /// Random V basis vector for the module (Heisenberg: degree <= 2, modes -1..-3).
  VBasis v_basis(const InducingModule& V);
  /// 1-3 terms, each a small rational times monomial (x) V basis vector.
  FockState state(const InducingModule& V, int max_degree, int max_mode);
  /// A single monomial (x) V basis vector; homogeneous in every grading.
  FockState homogeneous_state(const InducingModule& V, int max_degree, int max_mode);

 private:
  std::minstd_rand rng_;
};

}  // namespace imverma
