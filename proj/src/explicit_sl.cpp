#include "imverma/realization.hpp"

namespace imverma {

namespace {

NormalOrderedTerm creator_term(const Scalar& coeff, std::vector<int> ann, int alpha) {
  NormalOrderedTerm t;
  t.coeff = coeff;
  t.head.kind = HeadKind::creator;
  t.head.alpha = alpha;
  t.head.mode = ModeExpr::m_plus_slots(static_cast<int>(ann.size()));
  t.annihilators = std::move(ann);
  return t;
}

NormalOrderedTerm levi_term(const Scalar& coeff, std::vector<int> ann, const LieElement& w) {
  NormalOrderedTerm t;
  t.coeff = coeff;
  t.head.kind = HeadKind::levi;
  t.head.w = w;
  t.head.mode = ModeExpr::m_plus_slots(static_cast<int>(ann.size()));
  t.annihilators = std::move(ann);
  return t;
}

/// coeff * m * x_{alpha, -m} c.
NormalOrderedTerm central_term(const Scalar& coeff, int alpha) {
  NormalOrderedTerm t;
  t.coeff = coeff;
  ModeExpr factor;
  factor.m_coeff = 1;
  t.mode_factor = factor;
  t.annihilators = {alpha};
  t.head.kind = HeadKind::central;
  t.constraint = ModeExpr::m_plus_slots(1);
  return t;
}

/// h = diag(1, -1/n, ..., -1/n).
LieElement h_element(int n) {
  std::vector<Scalar> d(static_cast<std::size_t>(n + 1), Scalar(-1, n));
  for (auto& x : d) x.canonicalize();
  d[0] = 1;
  return LieElement::diagonal(n, d);
}

/// h_A = sum_{r,s} A_rs E_{r+1, s+1}.
LieElement h_a_element(int n, const std::map<std::pair<int, int>, Scalar>& A) {
  std::map<LieElement::Index, Scalar> entries;
  for (const auto& [rs, v] : A) {
    if (sgn(v) != 0) entries[{rs.first + 1, rs.second + 1}] = v;
  }
  return LieElement::from_entries(n, entries);
}

}  // namespace

NormalOrderedOperator build_operator_explicit_sl(const LieElement& a, const ParabolicData& pd) {
  if (!pd.is_first_maximal()) {
    throw SemanticError("the explicit engine needs Sigma = {2, ..., n} (the maximal parabolic)");
  }
  if (a.rank() != pd.n) throw SemanticError("element rank does not match the algebra");
  const int n = pd.n;
  // Families: alpha index i - 1 belongs to eps_1 - eps_{i+1}.
  NormalOrderedOperator op;
  op.provenance = Engine::explicit_sl;
  op.n = n;

  // pi(f_{i,m}) = -d_{x_{i,m}}
  for (int i = 1; i <= n; ++i) {
    const Scalar c = a.entry(i + 1, 1);
    if (sgn(c) != 0) op.terms.push_back(creator_term(-c, {}, i - 1));
  }

  // pi(h_m) = (1 + 1/n) sum_j d_{x_{j,k+m}} x_{j,k} + h_m
  const Scalar ch = a.entry(1, 1);
  if (sgn(ch) != 0) {
    const Scalar c = ch * (Scalar(1) + Scalar(1, n));
    for (int j = 1; j <= n; ++j) op.terms.push_back(creator_term(c, {j - 1}, j - 1));
    op.terms.push_back(levi_term(ch, {}, h_element(n)));
  }

  // pi(h_{A,m}) = -sum_{r,s} a_rs d_{x_{r,k+m}} x_{s,k} + h_{A,m}
  std::map<std::pair<int, int>, Scalar> A;
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) {
      Scalar v = a.entry(r + 1, s + 1);
      if (r == s) v += ch / n;
      if (sgn(v) != 0) A[{r, s}] = v;
    }
  }
  if (!A.empty()) {
    for (const auto& [rs, v] : A) op.terms.push_back(creator_term(-v, {rs.second - 1}, rs.first - 1));
    op.terms.push_back(levi_term(Scalar(1), {}, h_a_element(n, A)));
  }

  // pi(e_{i,m}) = sum_j d_{x_{j,k+l+m}} x_{i,k} x_{j,l} + m x_{i,-m} c + e_{i,m}
  //               + sum_k x_{i,k} h_{k+m} - sum_{j,k} x_{j,k} h_{E_ji - delta_ij I/n, k+m}
  for (int i = 1; i <= n; ++i) {
    const Scalar d = a.entry(1, i + 1);
    if (sgn(d) == 0) continue;
    for (int j = 1; j <= n; ++j) op.terms.push_back(creator_term(d, {i - 1, j - 1}, j - 1));
    op.terms.push_back(central_term(d, i - 1));
    op.terms.push_back(levi_term(d, {}, LieElement::unit(n, 1, i + 1)));
    op.terms.push_back(levi_term(d, {i - 1}, h_element(n)));
    for (int j = 1; j <= n; ++j) {
      std::map<std::pair<int, int>, Scalar> B;
      B[{j, i}] += 1;
      if (i == j) {
        for (int r = 1; r <= n; ++r) B[{r, r}] -= Scalar(1, n);
      }
      op.terms.push_back(levi_term(-d, {j - 1}, h_a_element(n, B)));
    }
  }
  return canonicalize(std::move(op));
}

NormalOrderedOperator build_operator_explicit_sl2(const LieElement& a, const ParabolicData& pd) {
  if (pd.n != 1) throw SemanticError("the sl(2) closed forms need n = 1");
  NormalOrderedOperator op;
  op.provenance = Engine::explicit_sl2;
  op.n = 1;
  const Scalar cf = a.entry(2, 1);
  const Scalar ch = a.entry(1, 1);
  const Scalar ce = a.entry(1, 2);
  // pi(f_n) = -d_{x_n}
  if (sgn(cf) != 0) op.terms.push_back(creator_term(-cf, {}, 0));
  // pi(h_n) = 2 sum_k d_{x_{k+n}} x_k + h_n
  if (sgn(ch) != 0) {
    op.terms.push_back(creator_term(2 * ch, {0}, 0));
    op.terms.push_back(levi_term(ch, {}, LieElement::coroot(1, 1)));
  }
  // pi(e_n) = sum_{k,l} d_{x_{k+l+n}} x_k x_l + n x_{-n} c + sum_k x_k h_{k+n} + e_n
  if (sgn(ce) != 0) {
    op.terms.push_back(creator_term(ce, {0, 0}, 0));
    op.terms.push_back(central_term(ce, 0));
    op.terms.push_back(levi_term(ce, {0}, LieElement::coroot(1, 1)));
    op.terms.push_back(levi_term(ce, {}, LieElement::unit(1, 1, 2)));
  }
  return canonicalize(std::move(op));
}

std::vector<std::pair<std::string, LieElement>> explicit_generators(int n) {
  std::vector<std::pair<std::string, LieElement>> out;
  for (int i = 1; i <= n; ++i) out.emplace_back("f_" + std::to_string(i), LieElement::unit(n, i + 1, 1));
  out.emplace_back("h", h_element(n));
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) {
      if (r != s) out.emplace_back("hA_" + std::to_string(r) + std::to_string(s), LieElement::unit(n, r + 1, s + 1));
    }
  }
  for (int r = 1; r < n; ++r) {
    out.emplace_back("hA_" + std::to_string(r) + std::to_string(r) + "-" + std::to_string(r + 1) + std::to_string(r + 1),
                     LieElement::coroot(n, r + 1));
  }
  for (int i = 1; i <= n; ++i) out.emplace_back("e_" + std::to_string(i), LieElement::unit(n, 1, i + 1));
  return out;
}

}  // namespace imverma
