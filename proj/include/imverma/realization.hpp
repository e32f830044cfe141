#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imverma/fock.hpp"
#include "imverma/formal_dist.hpp"
#include "imverma/inducing.hpp"
#include "imverma/lie.hpp"

namespace imverma {

// ---------------------------------------------------------------------------
// Series engine

inline constexpr int kBernoulliBound = 32;

/// B_k from x / (e^x - 1), so B_1 = -1/2. Throws std::out_of_range above `bound`.
Scalar bernoulli(int k, int bound = kBernoulliBound);

enum class SeriesKind { D, A, C };

/// coefficient * x_{w_1} ... x_{w_j} * base. For D, base is f_alpha of the
/// creator; for A, base is a p-element; for C, the first letter of the word is
/// the differentiated slot and base is paired with a by the invariant form.
struct SeriesTerm {
  std::vector<int> word;
  LieElement base;
  Scalar coeff;
};

/// Polynomial in the commuting a*_alpha with Lie coefficients, keyed by the
/// sorted multiset of alpha indices.
using LiePoly = std::map<std::vector<int>, LieElement>;

/// Applies ad(u) with u = sum_alpha a*_alpha f_alpha.
LiePoly ad_u(const LiePoly& p, const ParabolicData& pd);
/// ad(u)^k(a) for k = 0, 1, ... until the first vanishing power (excluded).
/// Throws std::logic_error if ad(u)^{2 depth + 1}(a) != 0.
std::vector<LiePoly> ad_u_powers(const LieElement& a, const ParabolicData& pd);

/// Expands one of the three summands of pi(a(z)). Requires a to be homogeneous.
std::vector<SeriesTerm> series_expand(const LieElement& a, SeriesKind kind, const ParabolicData& pd);

// ---------------------------------------------------------------------------
// Normal-ordered operators

/// m_coeff * m + constant + sum_i slot_coeffs[i] * n_i.
struct ModeExpr {
  int m_coeff = 0;
  int constant = 0;
  std::vector<int> slot_coeffs;

  static ModeExpr m_plus_slots(int slots);
  int eval(int m, const std::vector<int>& modes) const;
  bool has_slots() const;
  std::string to_string() const;
  friend auto operator<=>(const ModeExpr&, const ModeExpr&) = default;
};

enum class HeadKind { creator, levi, central, identity };

struct Head {
  HeadKind kind = HeadKind::identity;
  int alpha = -1;   ///< creator family
  LieElement w;     ///< levi element (in p)
  ModeExpr mode;    ///< creator / levi mode
};

/// coeff * [mode_factor] * x_{a_1, n_1} ... x_{a_k, n_k} followed by the head;
/// the x's act first. Each n_i is summed over Z subject to `constraint` = 0.
struct NormalOrderedTerm {
  Scalar coeff;
  std::optional<ModeExpr> mode_factor;
  std::vector<int> annihilators;
  Head head;
  std::optional<ModeExpr> constraint;

  std::string dump() const;
};

enum class Engine { general, explicit_sl, explicit_sl2 };

std::string to_string(Engine e);

/// pi(a_m) for symbolic m.
struct NormalOrderedOperator {
  Engine provenance = Engine::general;
  int n = 1;
  std::vector<NormalOrderedTerm> terms;

  std::string dump() const;
};

/// Canonical form: sorted slots, resolved single-slot constraints, merged
/// patterns, zero terms dropped, terms sorted by their dump.
NormalOrderedOperator canonicalize(NormalOrderedOperator op);
bool structurally_equal(const NormalOrderedOperator& a, const NormalOrderedOperator& b);

/// Evaluates pi(a_m) on a state.
FockState apply(const NormalOrderedOperator& op, int m, const FockState& s, const InducingModule& V);

NormalOrderedOperator build_operator_general(const LieElement& a, const ParabolicData& pd);
/// Closed forms for the maximal parabolic Sigma = Pi \ {alpha_1}; any a is
/// decomposed linearly over f_i, h, h_A, e_i.
NormalOrderedOperator build_operator_explicit_sl(const LieElement& a, const ParabolicData& pd);
/// Closed forms for sl(2) with the Borel subalgebra.
NormalOrderedOperator build_operator_explicit_sl2(const LieElement& a, const ParabolicData& pd);

/// Generators covered by the closed forms for sl(n+1): f_i, e_i, h and h_A
/// over the lower-block units (diagonal ones as E_rr - E_{r+1,r+1}).
std::vector<std::pair<std::string, LieElement>> explicit_generators(int n);

// ---------------------------------------------------------------------------
// Realization

struct BracketCheck {
  bool pass = true;
  FockState residual;
};

/// pi on Pol (x) V for a fixed parabolic, inducing module and engine.
class Realization {
 public:
  Realization(std::shared_ptr<const InducingModule> V, Engine engine);

  const ParabolicData& parabolic() const { return V_->parabolic(); }
  const InducingModule& module() const { return *V_; }
  Engine engine() const { return engine_; }

  /// Canonical operator pi(a), memoized per element.
  std::shared_ptr<const NormalOrderedOperator> op(const LieElement& a) const;

  FockState act(const LieElement& a, int m, const FockState& s) const;
  /// pi(c) = kappa.
  FockState act_central(const FockState& s) const;
  FockState act(const LoopElement& x, const FockState& s) const;

  /// pi(a_m) pi(b_n) - pi(b_n) pi(a_m) - pi([a,b]_{m+n}) - m (a,b) delta_{m,-n} kappa on s.
  BracketCheck check_bracket(const LieElement& a, const LieElement& b, int m, int n, const FockState& s) const;

  /// Applies pi(f_{alpha_1}^{g_1}) ... pi(f_{alpha_k}^{g_k}) to the vacuum v and
  /// compares the top PBW component with (-1)^k a^{g_1}_{alpha_1} ... a^{g_k}_{alpha_k} (x) v.
  bool pbw_leading_check(const std::vector<std::pair<int, LaurentPoly>>& seq, const VBasis& v) const;

  /// Test hook: negates term `index` of pi(a) from now on.
  void inject_sign_flip(const LieElement& a, std::size_t index);
  void clear_injections();

 private:
  NormalOrderedOperator build(const LieElement& a) const;

  std::shared_ptr<const InducingModule> V_;
  Engine engine_;
  std::map<LieElement, std::size_t> flips_;
  mutable std::mutex mutex_;
  mutable std::map<LieElement, std::shared_ptr<const NormalOrderedOperator>> cache_;
};

}  // namespace imverma
