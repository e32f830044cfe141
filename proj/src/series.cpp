#include <algorithm>
#include <stdexcept>

#include "imverma/realization.hpp"

namespace imverma {

Scalar bernoulli(int k, int bound) {
  if (k < 0 || k > bound) throw std::out_of_range("bernoulli index out of range: " + std::to_string(k));
  // Reciprocal of (e^x - 1)/x = sum_j x^j/(j+1)!, then B_k = k! r_k.
  std::vector<Scalar> s(static_cast<std::size_t>(k) + 1);
  Scalar fact = 1;
  for (int j = 0; j <= k; ++j) {
    fact *= j + 1;
    s[j] = 1 / fact;
  }
  std::vector<Scalar> r(static_cast<std::size_t>(k) + 1);
  r[0] = 1;
  for (int i = 1; i <= k; ++i) {
    Scalar acc = 0;
    for (int j = 1; j <= i; ++j) acc -= s[j] * r[i - j];
    r[i] = acc;
  }
  Scalar kf = 1;
  for (int j = 2; j <= k; ++j) kf *= j;
  return kf * r[k];
}

namespace {

Scalar factorial(int k) {
  Scalar f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

void add_poly(LiePoly& p, const std::vector<int>& w, const LieElement& x) {
  if (x.is_zero()) return;
  auto [it, inserted] = p.try_emplace(w, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero()) p.erase(it);
  }
}

LiePoly scaled(const LiePoly& p, const Scalar& c) {
  LiePoly out;
  if (sgn(c) == 0) return out;
  for (const auto& [w, x] : p) out.emplace(w, c * x);
  return out;
}

void accumulate(LiePoly& into, const LiePoly& p) {
  for (const auto& [w, x] : p) add_poly(into, w, x);
}

/// (base / lead, coeff * lead) with lead the first nonzero entry of base.
std::pair<LieElement, Scalar> normalize(const LieElement& base, const Scalar& coeff) {
  const Scalar lead = base.entries().begin()->second;
  return {(1 / lead) * base, coeff * lead};
}

}  // namespace

LiePoly ad_u(const LiePoly& p, const ParabolicData& pd) {
  LiePoly out;
  for (const auto& [w, x] : p) {
    for (std::size_t beta = 0; beta < pd.num_roots(); ++beta) {
      LieElement y = bracket(pd.f_basis[beta], x);
      if (y.is_zero()) continue;
      std::vector<int> w2 = w;
      w2.insert(std::upper_bound(w2.begin(), w2.end(), static_cast<int>(beta)), static_cast<int>(beta));
      add_poly(out, w2, y);
    }
  }
  return out;
}

std::vector<LiePoly> ad_u_powers(const LieElement& a, const ParabolicData& pd) {
  std::vector<LiePoly> powers;
  LiePoly cur;
  add_poly(cur, {}, a);
  const std::size_t limit = static_cast<std::size_t>(2 * pd.depth + 1);
  while (!cur.empty()) {
    if (powers.size() == limit) {
      throw std::logic_error("ad(u)^" + std::to_string(limit) + " does not vanish on " + a.to_string());
    }
    powers.push_back(cur);
    cur = ad_u(cur, pd);
  }
  return powers;
}

std::vector<SeriesTerm> series_expand(const LieElement& a, SeriesKind kind, const ParabolicData& pd) {
  if (a.rank() != pd.n) throw SemanticError("element rank does not match the algebra");
  if (!pd.degree(a)) throw SemanticError("series expansion needs a homogeneous element, got " + a.to_string());
  std::vector<SeriesTerm> out;
  if (a.is_zero()) return out;

  if (kind == SeriesKind::C) {
    // -((e^{ad u} - 1)/ad u  d_z u, a) c: one term per differentiated family beta0.
    for (std::size_t beta0 = 0; beta0 < pd.num_roots(); ++beta0) {
      const auto powers = ad_u_powers(pd.f_basis[beta0], pd);
      for (std::size_t k = 0; k < powers.size(); ++k) {
        const Scalar c = -1 / factorial(static_cast<int>(k) + 1);
        for (const auto& [w, x] : powers[k]) {
          if (is_zero(form(x, a))) continue;
          std::vector<int> word{static_cast<int>(beta0)};
          word.insert(word.end(), w.begin(), w.end());
          auto [base, coeff] = normalize(x, c);
          out.push_back({std::move(word), std::move(base), std::move(coeff)});
        }
      }
    }
    return out;
  }

  // E = e^{-ad u} a. The central correction of this conjugation is the C summand.
  const auto powers = ad_u_powers(a, pd);
  LiePoly e;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    const Scalar c = Scalar(j % 2 == 0 ? 1 : -1) / factorial(static_cast<int>(j));
    accumulate(e, scaled(powers[j], c));
  }

  if (kind == SeriesKind::A) {
    for (const auto& [w, x] : e) {
      LieElement xp = pd.project(x, Part::p);
      if (xp.is_zero()) continue;
      auto [base, coeff] = normalize(xp, Scalar(1));
      out.push_back({w, std::move(base), std::move(coeff)});
    }
    return out;
  }

  // D: T = (ad u e^{ad u}/(e^{ad u} - 1)) (E_ubar), coefficients (-1)^j B_j / j!.
  LiePoly e_ubar;
  for (const auto& [w, x] : e) add_poly(e_ubar, w, pd.project(x, Part::ubar));
  LiePoly t;
  LiePoly cur = e_ubar;
  for (int j = 0; !cur.empty(); ++j) {
    if (j > 2 * pd.depth + 1) throw std::logic_error("ad(u) series did not terminate");
    const Scalar c = Scalar(j % 2 == 0 ? 1 : -1) * bernoulli(j) / factorial(j);
    accumulate(t, scaled(cur, c));
    cur = ad_u(cur, pd);
  }
  for (const auto& [w, x] : t) {
    for (std::size_t alpha = 0; alpha < pd.num_roots(); ++alpha) {
      const Scalar coord = pd.ubar_coordinate(x, static_cast<int>(alpha));
      if (sgn(coord) == 0) continue;
      out.push_back({w, pd.f_basis[alpha], -coord});
    }
  }
  return out;
}

}  // namespace imverma
