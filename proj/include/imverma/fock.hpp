#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imverma/lie.hpp"
#include "imverma/scalar.hpp"

namespace imverma {

/// One factor b_{family, mode}^exp of a monomial.
struct Var {
  int family = 0;
  int mode = 0;
  int exp = 1;
  friend auto operator<=>(const Var&, const Var&) = default;
};

/// Commutative monomial, kept sorted by (family, mode) with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  /// Builds from arbitrary factors; merges repeats and validates exponents.
  static Monomial from_vars(std::vector<Var> vars);

  const std::vector<Var>& vars() const { return vars_; }
  bool empty() const { return vars_.empty(); }
  int degree() const;
  int exponent(int family, int mode) const;
  /// Sum of mode * exp.
  int mode_sum() const;

  Monomial times(int family, int mode, int exp = 1) const;
  /// Lowers the exponent of (family, mode) by one; the factor must be present.
  Monomial reduced(int family, int mode) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  std::string to_string(const char* symbol = "b") const;

 private:
  std::vector<Var> vars_;
};

/// Basis vector of the inducing module: an index into a finite basis, and for
/// the Heisenberg kind a monomial in h^{(i)}_{-n} (family i, mode -n).
struct VBasis {
  int index = 0;
  Monomial heis;
  friend auto operator<=>(const VBasis&, const VBasis&) = default;
};

struct StateKey {
  Monomial mono;
  VBasis v;
  friend auto operator<=>(const StateKey&, const StateKey&) = default;
};

/// Linear combination of b-monomials tensored with V basis vectors.
class FockState {
 public:
  using Terms = std::map<StateKey, Scalar>;

  FockState() = default;
  static FockState basis(const StateKey& key, const Scalar& coeff = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const StateKey& key) const;
  void add(const StateKey& key, const Scalar& c);

  FockState& operator+=(const FockState& other);
  FockState& operator-=(const FockState& other);
  FockState& operator*=(const Scalar& s);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(const Scalar& s, FockState a) { return a *= s; }
  friend bool operator==(const FockState&, const FockState&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// 1 (x) v.
FockState vacuum(int v_index = 0);
FockState vacuum(const VBasis& v);

/// Multiplication by b_{alpha, n}.
FockState apply_creation(const FockState& s, int alpha, int n);
/// x_{alpha, n}, acting as -d/db_{alpha, n}.
FockState apply_annihilation(const FockState& s, int alpha, int n);

/// Highest b-degree among the terms; 0 for the zero state.
int pbw_degree(const FockState& s);
/// Component of b-degree exactly d.
FockState degree_component(const FockState& s, int d);

/// Mode of a V basis vector (sum of Heisenberg creation modes).
int v_mode(const VBasis& v);
/// Common total mode of all terms, or nullopt when mixed. Zero state gives 0.
std::optional<int> total_mode(const FockState& s);

/// Weight of a single key under diagonal h. Each b_{alpha, n} contributes
/// -alpha(h); `v_weight` gives the weight of the V factor.
template <class VWeight>
Scalar key_weight(const StateKey& key, const ParabolicData& pd, const LieElement& h, VWeight&& v_weight) {
  Scalar w = v_weight(key.v);
  for (const Var& var : key.mono.vars()) {
    const Root& r = pd.delta_u.at(static_cast<std::size_t>(var.family));
    w -= Scalar(var.exp) * (h.entry(r.i, r.i) - h.entry(r.j, r.j));
  }
  return w;
}

/// Common h-weight of all terms, or nullopt when mixed or V is not a weight vector.
template <class VWeight>
std::optional<Scalar> h_weight(const FockState& s, const ParabolicData& pd, const LieElement& h, VWeight&& v_weight) {
  std::optional<Scalar> out;
  for (const auto& [key, c] : s.terms()) {
    const Scalar w = key_weight(key, pd, h, v_weight);
    if (out && *out != w) return std::nullopt;
    out = w;
  }
  return out ? out : std::optional<Scalar>(Scalar(0));
}

/// Canonical JSON text: an array of {"coeff", "monomial", "v"[, "vmonomial"]}.
std::string state_to_json(const FockState& s);
/// Inverse of state_to_json. Throws ParseError on malformed input and
/// SemanticError on out-of-range indices when `num_families` is given.
FockState state_from_json(const std::string& text, std::optional<int> num_families = std::nullopt);

}  // namespace imverma
