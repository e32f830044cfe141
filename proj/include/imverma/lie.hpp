#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imverma/scalar.hpp"

namespace imverma {

/// A traceless (n+1)x(n+1) matrix with exact entries, i.e. an element of
/// sl(n+1). Rows and columns are 1-based, matching E_ij.
class LieElement {
 public:
  using Index = std::pair<int, int>;

  LieElement() = default;
  explicit LieElement(int n);

  /// Matrix unit E_ij, i != j.
  static LieElement unit(int n, int i, int j);
  /// Coroot H_i = E_ii - E_{i+1,i+1}, 1 <= i <= n.
  static LieElement coroot(int n, int i);
  /// diag(d_1, ..., d_{n+1}); the entries must sum to zero.
  static LieElement diagonal(int n, const std::vector<Scalar>& d);
  /// Validates bounds and tracelessness.
  static LieElement from_entries(int n, const std::map<Index, Scalar>& entries);

  int rank() const { return n_; }
  int size() const { return n_ + 1; }
  Scalar entry(int i, int j) const;
  const std::map<Index, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  bool is_diagonal() const;

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Scalar& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& s, LieElement a) { return a *= s; }
  friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }

  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  /// Arbitrary but deterministic total order, for use as a map key.
  friend bool operator<(const LieElement& a, const LieElement& b);

  /// Coordinates in the Chevalley basis, printed as e.g. "E_12 - 1/2*H_1".
  std::string to_string() const;

 private:
  void add_entry(int i, int j, const Scalar& v);
  void check_same_rank(const LieElement& other) const;

  int n_ = 1;
  std::map<Index, Scalar> entries_;
};

/// [a, b] = ab - ba.
LieElement bracket(const LieElement& a, const LieElement& b);
/// Normalized invariant form (a, b) = tr(ab); (theta, theta) = 2.
Scalar form(const LieElement& a, const LieElement& b);
/// tr(ad a o ad b), computed over the full basis.
Scalar killing_form(const LieElement& a, const LieElement& b);

/// sl(n+1) with its Chevalley-style basis: E_ij for i < j, then H_1..H_n,
/// then E_ij for i > j.
struct SlAlgebra {
  int n = 1;
  std::vector<LieElement> basis;
  std::vector<std::string> names;

  std::size_t dim() const { return basis.size(); }
  /// Coordinates of x with respect to `basis`.
  std::vector<Scalar> coordinates(const LieElement& x) const;
  std::string name_of(std::size_t k) const { return names.at(k); }
};

/// Largest supported rank; larger requests are rejected as a sizing error.
inline constexpr int kMaxRank = 64;

SlAlgebra build_sl(int n);

/// Parses a generator expression for sl(n+1). Accepted atoms:
///   E_ij / E_i_j   matrix unit        H_i   coroot E_ii - E_{i+1,i+1}
///   e_i, f_i       E_{1,i+1}, E_{i+1,1} (e, f when n = 1)
///   h              diag(1, -1/n, ..., -1/n)
///   hA_rs          lower-block matrix unit E_{r+1,s+1} (r != s)
/// combined as sums, e.g. "2*E_12 - 1/2*H_1".
LieElement parse_element(std::string_view text, int n);

/// Root eps_i - eps_j, 1 <= i != j <= n+1.
struct Root {
  int i = 1;
  int j = 2;
  bool positive() const { return i < j; }
  friend auto operator<=>(const Root&, const Root&) = default;
};

enum class Part { ubar, levi, u, p };

/// Standard parabolic p = l + u of sl(n+1) determined by a set Sigma of
/// simple-root indices, together with the Sigma-height grading.
class ParabolicData {
 public:
  int n = 1;
  std::vector<int> sigma;                  ///< sorted, subset of 1..n
  std::vector<Root> delta_u;               ///< ordered by (ht, i, j)
  std::vector<LieElement> f_basis;         ///< f_alpha = E_ji spans g_{-alpha}
  std::vector<LieElement> e_basis;         ///< e_alpha = E_ij spans g_alpha
  std::vector<LieElement> levi_basis;      ///< H_1..H_n, then root vectors of Delta_Sigma
  int depth = 0;                           ///< ht_Sigma(theta)

  std::size_t num_roots() const { return delta_u.size(); }
  bool in_sigma(int simple) const;
  /// ht_Sigma of eps_i - eps_j (0 on the diagonal).
  int height(int i, int j) const;
  int height(const Root& r) const { return height(r.i, r.j); }
  std::optional<int> alpha_index(const Root& r) const;

  /// Sigma-degree of x; nullopt when x is not homogeneous. Zero has degree 0.
  std::optional<int> degree(const LieElement& x) const;
  LieElement project(const LieElement& x, Part part) const;
  /// Coefficient of f_alpha in the ubar-component of x.
  Scalar ubar_coordinate(const LieElement& x, int alpha) const;
  /// Basis of p: levi_basis followed by e_basis.
  std::vector<LieElement> p_basis() const;
  /// True for Sigma = Pi \ {alpha_1}, the maximal parabolic with abelian nilradical.
  bool is_first_maximal() const;
};

ParabolicData parabolic_decompose(int n, const std::set<int>& sigma);

/// Element of the loop algebra sl(n+1)[t, t^-1] + C c.
struct LoopElement {
  int n = 1;
  std::map<int, LieElement> terms;  ///< mode -> coefficient, zeros pruned
  Scalar central;

  LoopElement() = default;
  explicit LoopElement(int rank) : n(rank) {}
  static LoopElement mode(const LieElement& a, int m);
  static LoopElement central_element(int n, const Scalar& coeff = Scalar(1));

  LoopElement& operator+=(const LoopElement& other);
  LoopElement& operator*=(const Scalar& s);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, LoopElement b) {
    b *= Scalar(-1);
    return a += b;
  }
  friend bool operator==(const LoopElement& a, const LoopElement& b) {
    return a.n == b.n && a.terms == b.terms && a.central == b.central;
  }
  bool is_zero() const { return terms.empty() && is_zero_scalar(); }
  std::string to_string() const;

 private:
  bool is_zero_scalar() const { return sgn(central) == 0; }
};

/// [a_m, b_n] = [a,b]_{m+n} + m (a,b) delta_{m,-n} c, extended bilinearly.
LoopElement loop_bracket(const LoopElement& x, const LoopElement& y);

}  // namespace imverma
