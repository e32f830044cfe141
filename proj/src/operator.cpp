#include <algorithm>
#include <numeric>
#include <sstream>

#include "imverma/realization.hpp"

namespace imverma {

// ---------------------------------------------------------------------------
// ModeExpr

ModeExpr ModeExpr::m_plus_slots(int slots) {
  ModeExpr e;
  e.m_coeff = 1;
  e.slot_coeffs.assign(static_cast<std::size_t>(slots), 1);
  return e;
}

int ModeExpr::eval(int m, const std::vector<int>& modes) const {
  int v = m_coeff * m + constant;
  for (std::size_t i = 0; i < slot_coeffs.size(); ++i) v += slot_coeffs[i] * modes[i];
  return v;
}

bool ModeExpr::has_slots() const {
  return std::any_of(slot_coeffs.begin(), slot_coeffs.end(), [](int c) { return c != 0; });
}

namespace {

void append_signed(std::ostringstream& os, bool& first, int c, const std::string& sym) {
  if (c == 0) return;
  const int a = std::abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (sym.empty()) {
    os << a;
  } else {
    if (a != 1) os << a << "*";
    os << sym;
  }
  first = false;
}

std::string slot_name(std::size_t i) { return "n_" + std::to_string(i + 1); }

}  // namespace

std::string ModeExpr::to_string() const {
  std::ostringstream os;
  bool first = true;
  append_signed(os, first, m_coeff, "m");
  for (std::size_t i = 0; i < slot_coeffs.size(); ++i) append_signed(os, first, slot_coeffs[i], slot_name(i));
  append_signed(os, first, constant, "");
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Dumps

std::string to_string(Engine e) {
  switch (e) {
    case Engine::general:
      return "general";
    case Engine::explicit_sl:
      return "explicit_sl";
    case Engine::explicit_sl2:
      return "explicit_sl2";
  }
  return "?";
}

namespace {

/// Constraint sum_i c_i n_i + m_c m + k = 0 printed as "n_1 + n_2 = -m".
std::string constraint_string(const ModeExpr& c) {
  ModeExpr lhs;
  lhs.slot_coeffs = c.slot_coeffs;
  ModeExpr rhs;
  rhs.m_coeff = -c.m_coeff;
  rhs.constant = -c.constant;
  return lhs.to_string() + " = " + rhs.to_string();
}

std::string head_string(const Head& h, const std::optional<ModeExpr>& constraint) {
  switch (h.kind) {
    case HeadKind::creator:
      return "b(" + std::to_string(h.alpha) + ", " + h.mode.to_string() + ")";
    case HeadKind::levi:
      return "L[" + h.w.to_string() + "](" + h.mode.to_string() + ")";
    case HeadKind::central:
      return constraint ? "c [" + constraint_string(*constraint) + "]" : "c";
    case HeadKind::identity:
      return constraint ? "1 [" + constraint_string(*constraint) + "]" : "1";
  }
  return "?";
}

/// Everything except the coefficient (and the Levi element), used as merge key.
std::string pattern_string(const NormalOrderedTerm& t, bool with_levi) {
  std::ostringstream os;
  if (t.mode_factor) os << "[" << t.mode_factor->to_string() << "] * ";
  for (std::size_t i = 0; i < t.annihilators.size(); ++i) {
    os << "x(" << t.annihilators[i] << ", " << slot_name(i) << ") * ";
  }
  if (t.head.kind == HeadKind::levi && !with_levi) {
    os << "L[](" << t.head.mode.to_string() << ")";
  } else {
    os << head_string(t.head, t.constraint);
  }
  return os.str();
}

}  // namespace

std::string NormalOrderedTerm::dump() const { return to_string(coeff) + " * " + pattern_string(*this, true); }

std::string NormalOrderedOperator::dump() const {
  std::ostringstream os;
  for (const auto& t : terms) os << t.dump() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

ModeExpr permute(const ModeExpr& e, const std::vector<std::size_t>& order) {
  ModeExpr out = e;
  if (e.slot_coeffs.empty()) return out;
  for (std::size_t k = 0; k < order.size(); ++k) out.slot_coeffs[k] = e.slot_coeffs[order[k]];
  return out;
}

/// Substitutes n_slot = value (a slot-free expression) into e.
ModeExpr substitute(const ModeExpr& e, std::size_t slot, const ModeExpr& value) {
  ModeExpr out = e;
  if (slot >= e.slot_coeffs.size() || e.slot_coeffs[slot] == 0) return out;
  const int c = e.slot_coeffs[slot];
  out.slot_coeffs[slot] = 0;
  out.m_coeff += c * value.m_coeff;
  out.constant += c * value.constant;
  return out;
}

void trim(ModeExpr& e) {
  if (!e.has_slots()) e.slot_coeffs.clear();
}

NormalOrderedTerm canonical_term(NormalOrderedTerm t) {
  const std::size_t k = t.annihilators.size();
  // A mode factor on a single slot marks that slot as distinguished; put it first.
  std::optional<std::size_t> marked;
  if (t.mode_factor && t.mode_factor->has_slots()) {
    const auto& sc = t.mode_factor->slot_coeffs;
    if (std::count_if(sc.begin(), sc.end(), [](int c) { return c != 0; }) == 1) {
      marked = static_cast<std::size_t>(std::find_if(sc.begin(), sc.end(), [](int c) { return c != 0; }) - sc.begin());
    }
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ma = marked && *marked == a;
    const bool mb = marked && *marked == b;
    if (ma != mb) return ma;
    return t.annihilators[a] < t.annihilators[b];
  });
  std::vector<int> ann(k);
  for (std::size_t i = 0; i < k; ++i) ann[i] = t.annihilators[order[i]];
  t.annihilators = std::move(ann);
  t.head.mode = permute(t.head.mode, order);
  if (t.mode_factor) t.mode_factor = permute(*t.mode_factor, order);
  if (t.constraint) t.constraint = permute(*t.constraint, order);

  // A constraint on a single slot fixes its mode; fold it into the mode factor.
  if (t.constraint && k == 1 && t.constraint->slot_coeffs.size() == 1 &&
      std::abs(t.constraint->slot_coeffs[0]) == 1) {
    const int s = t.constraint->slot_coeffs[0];
    ModeExpr value;
    value.m_coeff = -s * t.constraint->m_coeff;
    value.constant = -s * t.constraint->constant;
    if (t.mode_factor) {
      t.mode_factor = substitute(*t.mode_factor, 0, value);
      trim(*t.mode_factor);
    }
    // Normalize the constraint to n_1 + (...) = 0.
    t.constraint->m_coeff *= s;
    t.constraint->constant *= s;
    t.constraint->slot_coeffs[0] = 1;
  }
  if (t.mode_factor && !t.mode_factor->has_slots()) {
    ModeExpr& f = *t.mode_factor;
    if (f.m_coeff == 0) {
      t.coeff *= f.constant;
      t.mode_factor.reset();
    } else if (f.constant == 0) {
      t.coeff *= f.m_coeff;
      f.m_coeff = 1;
      f.slot_coeffs.clear();
    }
  }
  if (t.head.kind == HeadKind::levi) {
    t.head.w *= t.coeff;
    t.coeff = sgn(t.coeff) == 0 ? Scalar(0) : Scalar(1);
  }
  return t;
}

bool is_zero_term(const NormalOrderedTerm& t) {
  if (t.head.kind == HeadKind::levi) return t.head.w.is_zero();
  return sgn(t.coeff) == 0;
}

}  // namespace

NormalOrderedOperator canonicalize(NormalOrderedOperator op) {
  std::map<std::string, NormalOrderedTerm> merged;
  for (auto& raw : op.terms) {
    NormalOrderedTerm t = canonical_term(std::move(raw));
    if (is_zero_term(t)) continue;
    const std::string key = pattern_string(t, false);
    auto [it, inserted] = merged.try_emplace(key, t);
    if (inserted) continue;
    if (t.head.kind == HeadKind::levi) {
      it->second.head.w += t.head.w;
    } else {
      it->second.coeff += t.coeff;
    }
  }
  std::vector<std::pair<std::string, NormalOrderedTerm>> sorted;
  for (auto& [key, t] : merged) {
    if (is_zero_term(t)) continue;
    sorted.emplace_back(t.dump(), std::move(t));
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  op.terms.clear();
  for (auto& [d, t] : sorted) op.terms.push_back(std::move(t));
  return op;
}

bool structurally_equal(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
  return a.n == b.n && canonicalize(a).dump() == canonicalize(b).dump();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct ApplyContext {
  const NormalOrderedTerm& term;
  int m;
  const InducingModule& V;
  FockState& out;
  std::vector<int> modes;
};

void emit(ApplyContext& ctx, const Monomial& mono, const VBasis& v, const Scalar& c) {
  const NormalOrderedTerm& t = ctx.term;
  if (t.constraint && t.constraint->eval(ctx.m, ctx.modes) != 0) return;
  Scalar coeff = c * t.coeff;
  if (t.mode_factor) coeff *= t.mode_factor->eval(ctx.m, ctx.modes);
  if (sgn(coeff) == 0) return;
  switch (t.head.kind) {
    case HeadKind::creator:
      ctx.out.add(StateKey{mono.times(t.head.alpha, t.head.mode.eval(ctx.m, ctx.modes)), v}, coeff);
      return;
    case HeadKind::levi:
      for (const auto& [v2, c2] : ctx.V.act(t.head.w, t.head.mode.eval(ctx.m, ctx.modes), v)) {
        ctx.out.add(StateKey{mono, v2}, coeff * c2);
      }
      return;
    case HeadKind::central:
      ctx.out.add(StateKey{mono, v}, coeff * ctx.V.level());
      return;
    case HeadKind::identity:
      ctx.out.add(StateKey{mono, v}, coeff);
      return;
  }
}

/// Annihilates slots left to right, each against a matching variable of the monomial.
void contract(ApplyContext& ctx, std::size_t slot, const Monomial& mono, const VBasis& v, const Scalar& c) {
  if (slot == ctx.term.annihilators.size()) {
    emit(ctx, mono, v, c);
    return;
  }
  const int alpha = ctx.term.annihilators[slot];
  for (const Var& var : mono.vars()) {
    if (var.family != alpha) continue;
    ctx.modes[slot] = var.mode;
    contract(ctx, slot + 1, mono.reduced(var.family, var.mode), v, c * Scalar(-var.exp));
  }
}

}  // namespace

FockState apply(const NormalOrderedOperator& op, int m, const FockState& s, const InducingModule& V) {
  if (op.n != V.parabolic().n) throw SemanticError("operator and module belong to different algebras");
  FockState out;
  for (const auto& t : op.terms) {
    ApplyContext ctx{t, m, V, out, std::vector<int>(t.annihilators.size())};
    for (const auto& [key, c] : s.terms()) {
      if (static_cast<int>(t.annihilators.size()) > key.mono.degree()) continue;
      contract(ctx, 0, key.mono, key.v, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// General engine

NormalOrderedOperator build_operator_general(const LieElement& a, const ParabolicData& pd) {
  NormalOrderedOperator op;
  op.provenance = Engine::general;
  op.n = pd.n;
  if (a.is_zero()) return op;

  // D: -sum_alpha a_alpha(z) [T]_alpha, head creator at m + sum n_i.
  for (const auto& st : series_expand(a, SeriesKind::D, pd)) {
    const int slots = static_cast<int>(st.word.size());
    NormalOrderedTerm t;
    t.coeff = st.coeff;
    t.annihilators = st.word;
    t.head.kind = HeadKind::creator;
    t.head.alpha = static_cast<int>(std::find(pd.f_basis.begin(), pd.f_basis.end(), st.base) - pd.f_basis.begin());
    t.head.mode = ModeExpr::m_plus_slots(slots);
    op.terms.push_back(std::move(t));
  }
  // A: (e^{-ad u} a(z))_p, head sigma(w) at m + sum n_i.
  for (const auto& st : series_expand(a, SeriesKind::A, pd)) {
    NormalOrderedTerm t;
    t.coeff = st.coeff;
    t.annihilators = st.word;
    t.head.kind = HeadKind::levi;
    t.head.w = st.base;
    t.head.mode = ModeExpr::m_plus_slots(static_cast<int>(st.word.size()));
    op.terms.push_back(std::move(t));
  }
  // C: the central part of e^{-ad u} a(z). The first slot carries d_z, hence
  // the mode factor n_1, and the residue forces n_1 + ... + n_k = -m.
  for (const auto& st : series_expand(a, SeriesKind::C, pd)) {
    const Scalar pairing = form(st.base, a);
    if (sgn(pairing) == 0) continue;
    const int slots = static_cast<int>(st.word.size());
    NormalOrderedTerm t;
    t.coeff = st.coeff * pairing;
    ModeExpr factor;
    factor.slot_coeffs.assign(static_cast<std::size_t>(slots), 0);
    factor.slot_coeffs[0] = 1;
    t.mode_factor = factor;
    t.annihilators = st.word;
    t.head.kind = HeadKind::central;
    t.constraint = ModeExpr::m_plus_slots(slots);
    op.terms.push_back(std::move(t));
  }
  return canonicalize(std::move(op));
}

}  // namespace imverma
