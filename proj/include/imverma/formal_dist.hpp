#pragma once

#include <map>
#include <string>
#include <vector>

#include "imverma/scalar.hpp"

namespace imverma {

/// Finite Laurent polynomial sum_k c_k z^k.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int power, const Scalar& coeff = Scalar(1));

  const std::map<int, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int power) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(int power, const Scalar& c);

  LaurentPoly derivative() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Scalar& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const Scalar& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string(char var = 'z') const;

 private:
  std::map<int, Scalar> coeffs_;
};

/// Symbolic kernel sum_d weight_d(w) * d_w^d delta(z - w), always kept in the
/// normal form where weights depend on w only.
class DeltaKernel {
 public:
  DeltaKernel() = default;
  /// d_w^order delta(z - w) with unit weight.
  static DeltaKernel delta(int order = 0);

  const std::map<int, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(int order, const LaurentPoly& weight);
  DeltaKernel& operator+=(const DeltaKernel& other);
  friend bool operator==(const DeltaKernel&, const DeltaKernel&) = default;

  std::string to_string() const;

 private:
  std::map<int, LaurentPoly> terms_;
};

/// a(z) * k, rewritten with a(z) d_w^d delta = sum_i C(d,i) a^(i)(w) d_w^{d-i} delta.
DeltaKernel multiply_by_field(const DeltaKernel& k, const LaurentPoly& a);
/// (z - w) * k, using (z - w) d_w^d delta = d * d_w^{d-1} delta.
DeltaKernel multiply_by_z_minus_w(const DeltaKernel& k);
/// True iff (z - w)^power * k reduces to zero.
bool annihilation_check(const DeltaKernel& k, int power);
/// Res_{z=0} a(z) k(z, w) = sum_d weight_d(w) d_w^d a(w).
LaurentPoly residue_pair(const DeltaKernel& k, const LaurentPoly& a);

/// Truncated bilateral series in z and w: (z power, w power) -> coefficient.
/// Used as an independent route for the delta identities.
struct BilateralWindow {
  std::map<std::pair<int, int>, Scalar> coeffs;

  /// Terms z^m w^{-m-1} of delta(z - w) (or delta(w - z) when swapped) for |m| <= radius.
  static BilateralWindow delta_series(int radius, bool swapped = false);
  BilateralWindow d_dz() const;
  BilateralWindow d_dw() const;
  BilateralWindow times_z(const LaurentPoly& a) const;
  BilateralWindow times_w(const LaurentPoly& a) const;
  /// Residue in z of the product with a(z): coefficients of w.
  LaurentPoly residue_z() const;
  /// Coefficients restricted to |z power| <= zr and |w power| <= wr.
  BilateralWindow restrict(int zr, int wr) const;
  friend bool operator==(const BilateralWindow&, const BilateralWindow&) = default;
};

struct DeltaCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the six delta-function identities on the window |m| <= radius.
std::vector<DeltaCheck> delta_selftest(int radius = 8);

}  // namespace imverma
