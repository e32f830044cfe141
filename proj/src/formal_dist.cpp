#include "imverma/formal_dist.hpp"

#include <sstream>

namespace imverma {

namespace {

Scalar binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(int power, const Scalar& coeff) {
  LaurentPoly p;
  p.add(power, coeff);
  return p;
}

Scalar LaurentPoly::coeff(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::add(int power, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly d;
  for (const auto& [k, c] : coeffs_) d.add(k - 1, Scalar(k) * c);
  return d;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.coeffs_) add(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& kv : coeffs_) kv.second *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [i, x] : a.coeffs_) {
    for (const auto& [j, y] : b.coeffs_) out.add(i + j, x * y);
  }
  return out;
}

std::string LaurentPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) os << " + ";
    os << imverma::to_string(it->second) << "*" << var << "^" << it->first;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// DeltaKernel

DeltaKernel DeltaKernel::delta(int order) {
  DeltaKernel k;
  k.add(order, LaurentPoly::monomial(0));
  return k;
}

void DeltaKernel::add(int order, const LaurentPoly& weight) {
  if (weight.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(order, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DeltaKernel& DeltaKernel::operator+=(const DeltaKernel& other) {
  for (const auto& [d, w] : other.terms_) add(d, w);
  return *this;
}

std::string DeltaKernel::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, w] : terms_) {
    if (!first) os << " + ";
    os << "(" << w.to_string('w') << ")*d_w^" << d << " delta(z-w)";
    first = false;
  }
  return os.str();
}

DeltaKernel multiply_by_field(const DeltaKernel& k, const LaurentPoly& a) {
  DeltaKernel out;
  for (const auto& [d, weight] : k.terms()) {
    LaurentPoly deriv = a;
    for (int i = 0; i <= d; ++i) {
      out.add(d - i, binomial(d, i) * (weight * deriv));
      deriv = deriv.derivative();
    }
  }
  return out;
}

DeltaKernel multiply_by_z_minus_w(const DeltaKernel& k) {
  DeltaKernel out;
  for (const auto& [d, weight] : k.terms()) {
    if (d > 0) out.add(d - 1, Scalar(d) * weight);
  }
  return out;
}

bool annihilation_check(const DeltaKernel& k, int power) {
  if (power < 0) throw SemanticError("annihilation power must be non-negative");
  DeltaKernel cur = k;
  for (int p = 0; p < power && !cur.is_zero(); ++p) cur = multiply_by_z_minus_w(cur);
  return cur.is_zero();
}

LaurentPoly residue_pair(const DeltaKernel& k, const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [d, weight] : k.terms()) {
    LaurentPoly deriv = a;
    for (int i = 0; i < d; ++i) deriv = deriv.derivative();
    out += weight * deriv;
  }
  return out;
}

// ---------------------------------------------------------------------------
// BilateralWindow

BilateralWindow BilateralWindow::delta_series(int radius, bool swapped) {
  BilateralWindow s;
  for (int m = -radius; m <= radius; ++m) {
    if (swapped) {
      s.coeffs[{-m - 1, m}] = 1;
    } else {
      s.coeffs[{m, -m - 1}] = 1;
    }
  }
  return s;
}

BilateralWindow BilateralWindow::d_dz() const {
  BilateralWindow out;
  for (const auto& [pw, c] : coeffs) {
    if (pw.first != 0) out.coeffs[{pw.first - 1, pw.second}] += Scalar(pw.first) * c;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

BilateralWindow BilateralWindow::d_dw() const {
  BilateralWindow out;
  for (const auto& [pw, c] : coeffs) {
    if (pw.second != 0) out.coeffs[{pw.first, pw.second - 1}] += Scalar(pw.second) * c;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

BilateralWindow BilateralWindow::times_z(const LaurentPoly& a) const {
  BilateralWindow out;
  for (const auto& [pw, c] : coeffs) {
    for (const auto& [k, ak] : a.coeffs()) out.coeffs[{pw.first + k, pw.second}] += c * ak;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

BilateralWindow BilateralWindow::times_w(const LaurentPoly& a) const {
  BilateralWindow out;
  for (const auto& [pw, c] : coeffs) {
    for (const auto& [k, ak] : a.coeffs()) out.coeffs[{pw.first, pw.second + k}] += c * ak;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

LaurentPoly BilateralWindow::residue_z() const {
  LaurentPoly out;
  for (const auto& [pw, c] : coeffs) {
    if (pw.first == -1) out.add(pw.second, c);
  }
  return out;
}

BilateralWindow BilateralWindow::restrict(int zr, int wr) const {
  BilateralWindow out;
  for (const auto& [pw, c] : coeffs) {
    if (std::abs(pw.first) <= zr && std::abs(pw.second) <= wr) out.coeffs[pw] = c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Self-test

namespace {

/// Expands a kernel into a bilateral window: weight(w) d_w^d of the truncated delta series.
BilateralWindow expand(const DeltaKernel& k, int radius) {
  BilateralWindow out;
  for (const auto& [d, weight] : k.terms()) {
    BilateralWindow s = BilateralWindow::delta_series(radius);
    for (int i = 0; i < d; ++i) s = s.d_dw();
    s = s.times_w(weight);
    for (const auto& [pw, c] : s.coeffs) out.coeffs[pw] += c;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

LaurentPoly sample_field(int radius) {
  LaurentPoly a;
  for (int k = -radius; k <= radius; ++k) {
    Scalar c(k * k - 3 * k + 1, 1 + std::abs(k));
    c.canonicalize();
    a.add(k, c);
  }
  return a;
}

}  // namespace

std::vector<DeltaCheck> delta_selftest(int radius) {
  std::vector<DeltaCheck> out;
  // Padding keeps truncation edges of the series away from the compared window.
  const int support = std::max(1, radius / 2 + 2);
  const int pad = radius + 2 * support + 4;
  const LaurentPoly a = sample_field(support);

  {
    const auto lhs = BilateralWindow::delta_series(pad).restrict(radius, radius);
    const auto rhs = BilateralWindow::delta_series(pad, true).restrict(radius, radius);
    out.push_back({"1) delta(z-w) = delta(w-z)", lhs == rhs, ""});
  }
  {
    bool ok = true;
    std::string detail;
    const DeltaKernel dw = DeltaKernel::delta(1);
    for (int m = -radius; m <= radius && ok; ++m) {
      // Res_z z^m d_z delta(z-w) = -m w^{m-1}, computed on the series.
      const auto series = BilateralWindow::delta_series(pad).d_dz().times_z(LaurentPoly::monomial(m)).residue_z();
      LaurentPoly negated = series;
      negated *= Scalar(-1);
      if (negated != residue_pair(dw, LaurentPoly::monomial(m))) {
        ok = false;
        detail = "mismatch at z^" + std::to_string(m);
      }
    }
    const auto dz = BilateralWindow::delta_series(pad).d_dz().restrict(radius, radius);
    auto minus_dw = BilateralWindow::delta_series(pad).d_dw();
    for (auto& kv : minus_dw.coeffs) kv.second = -kv.second;
    ok = ok && dz == minus_dw.restrict(radius, radius);
    out.push_back({"2) d_z delta(z-w) = -d_w delta(z-w)", ok, detail});
  }
  {
    const DeltaKernel lhs_kernel = multiply_by_field(DeltaKernel::delta(0), a);
    const auto series = BilateralWindow::delta_series(pad).times_z(a).restrict(radius, radius);
    const bool ok = expand(lhs_kernel, pad).restrict(radius, radius) == series &&
                    lhs_kernel == [&] {
                      DeltaKernel k;
                      k.add(0, a);
                      return k;
                    }();
    out.push_back({"3) a(z) delta(z-w) = a(w) delta(z-w)", ok, ""});
  }
  {
    const DeltaKernel lhs_kernel = multiply_by_field(DeltaKernel::delta(1), a);
    const auto series = BilateralWindow::delta_series(pad).d_dw().times_z(a).restrict(radius, radius);
    DeltaKernel expected;
    expected.add(1, a);
    expected.add(0, a.derivative());
    const bool ok = expand(lhs_kernel, pad).restrict(radius, radius) == series && lhs_kernel == expected;
    out.push_back({"4) a(z) d_w delta = a(w) d_w delta + a'(w) delta", ok, ""});
  }
  {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= 4 && ok; ++n) {
      if (!annihilation_check(DeltaKernel::delta(n), n + 1) || annihilation_check(DeltaKernel::delta(n), n)) {
        ok = false;
        detail = "failed at n=" + std::to_string(n);
      }
      // Series route: multiply the truncated series by (z - w)^{n+1} and inspect the interior.
      BilateralWindow s = BilateralWindow::delta_series(pad);
      for (int i = 0; i < n; ++i) s = s.d_dw();
      for (int p = 0; p <= n; ++p) {
        BilateralWindow zs = s.times_z(LaurentPoly::monomial(1));
        BilateralWindow ws = s.times_w(LaurentPoly::monomial(1));
        for (auto& kv : ws.coeffs) zs.coeffs[kv.first] -= kv.second;
        std::erase_if(zs.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
        s = zs;
      }
      if (!s.restrict(radius, radius).coeffs.empty()) {
        ok = false;
        detail = "series nonzero at n=" + std::to_string(n);
      }
    }
    out.push_back({"5) (z-w)^{n+1} d_w^n delta(z-w) = 0", ok, detail});
  }
  {
    const auto series = BilateralWindow::delta_series(pad).times_z(a).residue_z();
    const bool ok = series == a && residue_pair(DeltaKernel::delta(0), a) == a;
    out.push_back({"6) Res_z a(z) delta(z-w) = a(w)", ok, ""});
  }
  return out;
}

}  // namespace imverma
