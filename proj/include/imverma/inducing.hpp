#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "imverma/fock.hpp"
#include "imverma/lie.hpp"
#include "imverma/scalar.hpp"

namespace imverma {

/// Vector of the inducing module, as a combination of basis vectors.
using VVector = std::map<VBasis, Scalar>;

void add_to(VVector& v, const VBasis& b, const Scalar& c);

/// Square matrix over Q, row-major.
using Matrix = std::vector<std::vector<Scalar>>;

enum class ModuleKind { character, evaluation, heisenberg_fock };

std::string to_string(ModuleKind kind);

/// One prescribed value sigma(x (x) t^mode) = value for x in the centre of l.
struct CharacterAssignment {
  LieElement x;
  int mode = 0;
  Scalar value;
};

/// Coordinates of the l-component of x in pd.levi_basis.
std::vector<Scalar> levi_coordinates(const ParabolicData& pd, const LieElement& x);

/// Basis of the centre z(l): block-scalar traceless diagonal matrices.
std::vector<LieElement> levi_center_basis(const ParabolicData& pd);

/// Continuous p_nat-module (sigma, V) with sigma(c) = level. The nilradical
/// loop algebra u_nat acts by zero in every kind.
class InducingModule {
 public:
  ModuleKind kind() const { return kind_; }
  const ParabolicData& parabolic() const { return pd_; }
  const Scalar& level() const { return level_; }
  /// Finite dimension, or nullopt for the graded-infinite Heisenberg module.
  std::optional<int> dim() const;
  /// True when sigma(x_j) shifts the V-mode by exactly j.
  bool mode_graded() const;

  /// sigma(x (x) t^mode) v for x in p. Throws SemanticError if x has a
  /// ubar-component or the mode is undefined (evaluation at s = 0, j < 0).
  VVector act(const LieElement& x, int mode, const VBasis& v) const;
  /// Weight of v under a diagonal h, or nullopt if v is not a weight vector.
  std::optional<Scalar> v_weight(const VBasis& v, const LieElement& h) const;
  /// Checks a V basis vector is valid for this module.
  void validate(const VBasis& v) const;

  std::string describe() const;

  // Per-kind data; read-only after construction.
  std::map<int, LieElement> character_functional;  ///< mode -> L_j with sigma(y_j) = (L_j, y)
  std::vector<Matrix> rho;                          ///< evaluation: one matrix per levi_basis element
  Scalar eval_point;
  std::vector<Scalar> highest_weight;               ///< heisenberg: lambda_i for H_i
  Matrix gram;                                      ///< heisenberg: (H_i, H_j)

  friend InducingModule character_module(const ParabolicData&, const std::vector<CharacterAssignment>&, const Scalar&);
  friend InducingModule evaluation_module_unchecked(const ParabolicData&, std::vector<Matrix>, const Scalar&,
                                                    const Scalar&);
  friend InducingModule heisenberg_fock(const ParabolicData&, std::vector<Scalar>, const Scalar&);

 private:
  ModuleKind kind_ = ModuleKind::character;
  ParabolicData pd_;
  Scalar level_;
  int eval_dim_ = 1;
};

/// One-dimensional module. Each assignment must lie in z(l) and the level must be 0.
InducingModule character_module(const ParabolicData& pd, const std::vector<CharacterAssignment>& assignments,
                                const Scalar& level = Scalar(0));

/// sigma(x_j) = s^j rho(x) with rho given on pd.levi_basis. Rejects nonzero
/// level and matrices that fail the bracket relations of l.
InducingModule evaluation_module(const ParabolicData& pd, std::vector<Matrix> rho, const Scalar& s,
                                 const Scalar& level = Scalar(0));
/// Same without the bracket check; used to build corrupted modules in tests.
InducingModule evaluation_module_unchecked(const ParabolicData& pd, std::vector<Matrix> rho, const Scalar& s,
                                           const Scalar& level = Scalar(0));
/// rho(x) = the diagonal block of x on rows/columns `block` (1-based, consecutive).
std::vector<Matrix> block_natural_rep(const ParabolicData& pd, int first, int last);
/// Natural representation of the Levi block containing index `row`.
std::vector<Matrix> block_natural_rep_at(const ParabolicData& pd, int row);

/// Heisenberg Fock module over h_nat at level kappa; requires Sigma empty.
InducingModule heisenberg_fock(const ParabolicData& pd, std::vector<Scalar> lambda, const Scalar& level);

struct AxiomReport {
  bool pass = true;
  long checks = 0;
  std::string witness;
};

/// Verifies sigma([x_m, y_n]) = [sigma(x_m), sigma(y_n)] (with the central
/// term) for all p-basis pairs and |m|, |n| <= window on the given vectors.
AxiomReport axiom_check(const InducingModule& V, int window, const std::vector<VBasis>& samples);

}  // namespace imverma
