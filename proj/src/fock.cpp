#include "imverma/fock.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace imverma {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_vars(std::vector<Var> vars) {
  std::sort(vars.begin(), vars.end());
  Monomial m;
  for (const Var& v : vars) {
    if (v.exp < 1) throw SemanticError("monomial exponents must be positive");
    if (!m.vars_.empty() && m.vars_.back().family == v.family && m.vars_.back().mode == v.mode) {
      m.vars_.back().exp += v.exp;
    } else {
      m.vars_.push_back(v);
    }
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const Var& v : vars_) d += v.exp;
  return d;
}

int Monomial::exponent(int family, int mode) const {
  for (const Var& v : vars_) {
    if (v.family == family && v.mode == mode) return v.exp;
  }
  return 0;
}

int Monomial::mode_sum() const {
  int s = 0;
  for (const Var& v : vars_) s += v.mode * v.exp;
  return s;
}

Monomial Monomial::times(int family, int mode, int exp) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.vars_.begin(), out.vars_.end(), Var{family, mode, 0},
                             [](const Var& a, const Var& b) { return std::tie(a.family, a.mode) < std::tie(b.family, b.mode); });
  if (it != out.vars_.end() && it->family == family && it->mode == mode) {
    it->exp += exp;
  } else {
    out.vars_.insert(it, Var{family, mode, exp});
  }
  return out;
}

Monomial Monomial::reduced(int family, int mode) const {
  Monomial out = *this;
  for (auto it = out.vars_.begin(); it != out.vars_.end(); ++it) {
    if (it->family == family && it->mode == mode) {
      if (--it->exp == 0) out.vars_.erase(it);
      return out;
    }
  }
  throw std::logic_error("Monomial::reduced: factor not present");
}

std::string Monomial::to_string(const char* symbol) const {
  if (vars_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Var& v : vars_) {
    if (!first) os << "*";
    os << symbol << "(" << v.family << "," << v.mode << ")";
    if (v.exp != 1) os << "^" << v.exp;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FockState

FockState FockState::basis(const StateKey& key, const Scalar& coeff) {
  FockState s;
  s.add(key, coeff);
  return s;
}

Scalar FockState::coeff(const StateKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void FockState::add(const StateKey& key, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

FockState& FockState::operator+=(const FockState& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

FockState& FockState::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

std::string FockState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << imverma::to_string(c) << ") " << k.mono.to_string() << " (x) v" << k.v.index;
    if (!k.v.heis.empty()) os << "[" << k.v.heis.to_string("h") << "]";
    first = false;
  }
  return os.str();
}

FockState vacuum(int v_index) {
  if (v_index < 0) throw SemanticError("negative V basis index");
  return FockState::basis(StateKey{Monomial{}, VBasis{v_index, Monomial{}}});
}

FockState vacuum(const VBasis& v) { return FockState::basis(StateKey{Monomial{}, v}); }

FockState apply_creation(const FockState& s, int alpha, int n) {
  FockState out;
  for (const auto& [k, c] : s.terms()) out.add(StateKey{k.mono.times(alpha, n), k.v}, c);
  return out;
}

FockState apply_annihilation(const FockState& s, int alpha, int n) {
  FockState out;
  for (const auto& [k, c] : s.terms()) {
    const int e = k.mono.exponent(alpha, n);
    if (e == 0) continue;
    out.add(StateKey{k.mono.reduced(alpha, n), k.v}, Scalar(-e) * c);
  }
  return out;
}

int pbw_degree(const FockState& s) {
  int d = 0;
  for (const auto& [k, c] : s.terms()) d = std::max(d, k.mono.degree());
  return d;
}

FockState degree_component(const FockState& s, int d) {
  FockState out;
  for (const auto& [k, c] : s.terms()) {
    if (k.mono.degree() == d) out.add(k, c);
  }
  return out;
}

int v_mode(const VBasis& v) { return v.heis.mode_sum(); }

std::optional<int> total_mode(const FockState& s) {
  std::optional<int> out;
  for (const auto& [k, c] : s.terms()) {
    const int m = k.mono.mode_sum() + v_mode(k.v);
    if (out && *out != m) return std::nullopt;
    out = m;
  }
  return out ? out : std::optional<int>(0);
}

// ---------------------------------------------------------------------------
// JSON state format

namespace {

json monomial_to_json(const Monomial& m) {
  json arr = json::array();
  for (const Var& v : m.vars()) arr.push_back(json::array({v.family, v.mode, v.exp}));
  return arr;
}

Monomial monomial_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Var> vars;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer()) {
      throw ParseError(std::string(what) + " entries must be [index, mode, exponent] integer triples");
    }
    vars.push_back(Var{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  return Monomial::from_vars(std::move(vars));
}

}  // namespace

std::string state_to_json(const FockState& s) {
  json arr = json::array();
  for (const auto& [k, c] : s.terms()) {
    json rec;
    rec["coeff"] = to_string(c);
    rec["monomial"] = monomial_to_json(k.mono);
    rec["v"] = k.v.index;
    if (!k.v.heis.empty()) rec["vmonomial"] = monomial_to_json(k.v.heis);
    arr.push_back(std::move(rec));
  }
  return arr.dump() + "\n";
}

FockState state_from_json(const std::string& text, std::optional<int> num_families) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("state file must be a JSON array of records");
  FockState s;
  for (const json& rec : j) {
    if (!rec.is_object() || !rec.contains("coeff") || !rec.contains("monomial")) {
      throw ParseError("state record needs \"coeff\" and \"monomial\"");
    }
    if (!rec["coeff"].is_string()) throw ParseError("coeff must be a rational string");
    const Scalar c = parse_scalar(rec["coeff"].get<std::string>());
    Monomial mono = monomial_from_json(rec["monomial"], "monomial");
    VBasis v;
    if (rec.contains("v")) {
      if (!rec["v"].is_number_integer()) throw ParseError("v must be an integer");
      v.index = rec["v"].get<int>();
      if (v.index < 0) throw SemanticError("negative V basis index");
    }
    if (rec.contains("vmonomial")) {
      v.heis = monomial_from_json(rec["vmonomial"], "vmonomial");
      for (const Var& var : v.heis.vars()) {
        if (var.mode >= 0) throw SemanticError("vmonomial modes must be negative");
      }
    }
    if (num_families) {
      for (const Var& var : mono.vars()) {
        if (var.family < 0 || var.family >= *num_families) {
          throw SemanticError("monomial alpha index " + std::to_string(var.family) + " out of range");
        }
      }
    }
    s.add(StateKey{std::move(mono), std::move(v)}, c);
  }
  return s;
}

}  // namespace imverma
