#include "imverma/realization.hpp"

namespace imverma {

Realization::Realization(std::shared_ptr<const InducingModule> V, Engine engine) : V_(std::move(V)), engine_(engine) {
  if (!V_) throw SemanticError("realization needs an inducing module");
  const ParabolicData& pd = V_->parabolic();
  if (engine_ == Engine::explicit_sl && !pd.is_first_maximal()) {
    throw SemanticError("the explicit engine needs the maximal parabolic Sigma = {2, ..., n}");
  }
  if (engine_ == Engine::explicit_sl2 && pd.n != 1) throw SemanticError("the sl(2) engine needs n = 1");
}

NormalOrderedOperator Realization::build(const LieElement& a) const {
  const ParabolicData& pd = parabolic();
  switch (engine_) {
    case Engine::general: {
      // Split into graded pieces so any element is accepted here.
      std::map<int, LieElement> pieces;
      for (const auto& [ij, v] : a.entries()) {
        if (ij.first == ij.second) continue;
        const int deg = ij.first < ij.second ? pd.height(ij.first, ij.second) : -pd.height(ij.second, ij.first);
        auto [it, inserted] = pieces.try_emplace(deg, LieElement(pd.n));
        it->second += v * LieElement::unit(pd.n, ij.first, ij.second);
      }
      // Diagonal part lives in degree 0.
      std::vector<Scalar> d(static_cast<std::size_t>(pd.n + 1));
      bool any = false;
      for (int i = 1; i <= pd.n + 1; ++i) {
        d[static_cast<std::size_t>(i - 1)] = a.entry(i, i);
        any = any || sgn(a.entry(i, i)) != 0;
      }
      if (any) pieces.try_emplace(0, LieElement(pd.n)).first->second += LieElement::diagonal(pd.n, d);
      NormalOrderedOperator op;
      op.provenance = Engine::general;
      op.n = pd.n;
      for (const auto& [deg, x] : pieces) {
        if (x.is_zero()) continue;
        auto part = build_operator_general(x, pd);
        op.terms.insert(op.terms.end(), part.terms.begin(), part.terms.end());
      }
      return canonicalize(std::move(op));
    }
    case Engine::explicit_sl:
      return build_operator_explicit_sl(a, pd);
    case Engine::explicit_sl2:
      return build_operator_explicit_sl2(a, pd);
  }
  throw std::logic_error("unknown engine");
}

std::shared_ptr<const NormalOrderedOperator> Realization::op(const LieElement& a) const {
  if (a.rank() != parabolic().n) throw SemanticError("element rank does not match the algebra");
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
  }
  // Built outside the lock; a racing duplicate produces an identical value.
  NormalOrderedOperator built = build(a);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto f = flips_.find(a);
    if (f != flips_.end() && f->second < built.terms.size()) {
      NormalOrderedTerm& t = built.terms[f->second];
      if (t.head.kind == HeadKind::levi) {
        t.head.w *= Scalar(-1);
      } else {
        t.coeff = -t.coeff;
      }
    }
    auto [it, inserted] = cache_.try_emplace(a, std::make_shared<const NormalOrderedOperator>(std::move(built)));
    return it->second;
  }
}

FockState Realization::act(const LieElement& a, int m, const FockState& s) const {
  if (a.is_zero() || s.is_zero()) return FockState{};
  return apply(*op(a), m, s, *V_);
}

FockState Realization::act_central(const FockState& s) const {
  FockState out = s;
  out *= V_->level();
  return out;
}

FockState Realization::act(const LoopElement& x, const FockState& s) const {
  if (x.n != parabolic().n) throw SemanticError("loop element rank does not match the algebra");
  FockState out;
  for (const auto& [m, a] : x.terms) out += act(a, m, s);
  if (sgn(x.central) != 0) out += x.central * act_central(s);
  return out;
}

BracketCheck Realization::check_bracket(const LieElement& a, const LieElement& b, int m, int n,
                                        const FockState& s) const {
  BracketCheck r;
  r.residual = act(a, m, act(b, n, s));
  r.residual -= act(b, n, act(a, m, s));
  r.residual -= act(bracket(a, b), m + n, s);
  if (m == -n) r.residual -= (Scalar(m) * form(a, b)) * act_central(s);
  r.pass = r.residual.is_zero();
  return r;
}

bool Realization::pbw_leading_check(const std::vector<std::pair<int, LaurentPoly>>& seq, const VBasis& v) const {
  const ParabolicData& pd = parabolic();
  FockState state = vacuum(v);
  // Rightmost factor acts first. f^g = Res_z f(z) g(z) = sum_k g_k f_k.
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const LieElement& f = pd.f_basis.at(static_cast<std::size_t>(it->first));
    FockState next;
    for (const auto& [k, gk] : it->second.coeffs()) next += gk * act(f, k, state);
    state = std::move(next);
  }
  FockState expected = vacuum(v);
  for (const auto& [alpha, g] : seq) {
    FockState next;
    for (const auto& [k, gk] : g.coeffs()) next += gk * apply_creation(expected, alpha, k);
    expected = std::move(next);
  }
  if (seq.size() % 2 == 1) expected *= Scalar(-1);
  return degree_component(state, static_cast<int>(seq.size())) == expected &&
         pbw_degree(state) <= static_cast<int>(seq.size());
}

void Realization::inject_sign_flip(const LieElement& a, std::size_t index) {
  std::lock_guard<std::mutex> lock(mutex_);
  flips_[a] = index;
  cache_.erase(a);
}

void Realization::clear_injections() {
  std::lock_guard<std::mutex> lock(mutex_);
  flips_.clear();
  cache_.clear();
}

}  // namespace imverma
