#include "imverma/lie.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace imverma {

// ---------------------------------------------------------------------------
// LieElement

LieElement::LieElement(int n) : n_(n) {
  if (n < 1) throw SemanticError("rank must be at least 1");
}

LieElement LieElement::unit(int n, int i, int j) {
  LieElement x(n);
  if (i == j || i < 1 || j < 1 || i > n + 1 || j > n + 1) {
    throw SemanticError("E_" + std::to_string(i) + std::to_string(j) + " is not a root vector of sl(" +
                        std::to_string(n + 1) + ")");
  }
  x.entries_[{i, j}] = 1;
  return x;
}

LieElement LieElement::coroot(int n, int i) {
  if (i < 1 || i > n) throw SemanticError("H_" + std::to_string(i) + " out of range");
  LieElement x(n);
  x.entries_[{i, i}] = 1;
  x.entries_[{i + 1, i + 1}] = -1;
  return x;
}

LieElement LieElement::diagonal(int n, const std::vector<Scalar>& d) {
  if (static_cast<int>(d.size()) != n + 1) throw SemanticError("diagonal has wrong length");
  std::map<Index, Scalar> entries;
  for (int i = 0; i <= n; ++i) entries[{i + 1, i + 1}] = d[i];
  return from_entries(n, entries);
}

LieElement LieElement::from_entries(int n, const std::map<Index, Scalar>& entries) {
  LieElement x(n);
  Scalar trace;
  for (const auto& [idx, v] : entries) {
    const auto [i, j] = idx;
    if (i < 1 || j < 1 || i > n + 1 || j > n + 1) throw SemanticError("matrix index out of range");
    if (i == j) trace += v;
    x.add_entry(i, j, v);
  }
  if (sgn(trace) != 0) throw SemanticError("element is not traceless");
  return x;
}

Scalar LieElement::entry(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Scalar(0) : it->second;
}

bool LieElement::is_diagonal() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.first.first == kv.first.second; });
}

void LieElement::add_entry(int i, int j, const Scalar& v) {
  if (sgn(v) == 0) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, v);
  if (!inserted) {
    it->second += v;
    if (sgn(it->second) == 0) entries_.erase(it);
  }
}

void LieElement::check_same_rank(const LieElement& other) const {
  if (n_ != other.n_) {
    throw SemanticError("rank mismatch: sl(" + std::to_string(n_ + 1) + ") vs sl(" + std::to_string(other.n_ + 1) + ")");
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  check_same_rank(other);
  for (const auto& [idx, v] : other.entries_) add_entry(idx.first, idx.second, v);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  check_same_rank(other);
  for (const auto& [idx, v] : other.entries_) add_entry(idx.first, idx.second, -v);
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& kv : entries_) kv.second *= s;
  return *this;
}

bool operator<(const LieElement& a, const LieElement& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  for (; ia != a.entries_.end() && ib != b.entries_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.entries_.end() && ib != b.entries_.end();
}

std::string LieElement::to_string() const {
  if (is_zero()) return "0";
  const SlAlgebra alg = build_sl(n_);
  const auto coords = alg.coordinates(*this);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const Scalar& c = coords[k];
    if (sgn(c) == 0) continue;
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << imverma::to_string(mag) << "*";
    os << alg.names[k];
    first = false;
  }
  return os.str();
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.rank() != b.rank()) {
    throw SemanticError("rank mismatch in bracket");
  }
  std::map<LieElement::Index, Scalar> out;
  auto accumulate = [&out](const LieElement& x, const LieElement& y, int sign) {
    for (const auto& [ix, vx] : x.entries()) {
      for (const auto& [iy, vy] : y.entries()) {
        if (ix.second != iy.first) continue;
        Scalar p = vx * vy;
        if (sign < 0) p = -p;
        out[{ix.first, iy.second}] += p;
      }
    }
  };
  accumulate(a, b, 1);
  accumulate(b, a, -1);
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return LieElement::from_entries(a.rank(), out);
}

Scalar form(const LieElement& a, const LieElement& b) {
  if (a.rank() != b.rank()) throw SemanticError("rank mismatch in form");
  Scalar tr;
  for (const auto& [ia, va] : a.entries()) {
    tr += va * b.entry(ia.second, ia.first);
  }
  return tr;
}

Scalar killing_form(const LieElement& a, const LieElement& b) {
  if (a.rank() != b.rank()) throw SemanticError("rank mismatch in killing_form");
  const SlAlgebra alg = build_sl(a.rank());
  Scalar tr;
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    const auto image = bracket(a, bracket(b, alg.basis[k]));
    tr += alg.coordinates(image)[k];
  }
  return tr;
}

// ---------------------------------------------------------------------------
// SlAlgebra

std::vector<Scalar> SlAlgebra::coordinates(const LieElement& x) const {
  if (x.rank() != n) throw SemanticError("rank mismatch in coordinates");
  std::vector<Scalar> out(basis.size());
  // Off-diagonal coordinates are entries; H_i picks up the partial sums of the diagonal.
  std::vector<Scalar> partial(n + 1);
  Scalar running;
  for (int i = 1; i <= n; ++i) {
    running += x.entry(i, i);
    partial[i] = running;
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& [idx, v] = *basis[k].entries().begin();
    if (basis[k].is_diagonal()) {
      out[k] = partial[idx.first];
    } else {
      out[k] = x.entry(idx.first, idx.second);
    }
  }
  return out;
}

SlAlgebra build_sl(int n) {
  if (n < 1) throw std::length_error("sl(n+1) requires n >= 1");
  if (n > kMaxRank) throw std::length_error("rank " + std::to_string(n) + " exceeds supported maximum " + std::to_string(kMaxRank));
  SlAlgebra alg;
  alg.n = n;
  auto unit_name = [n](int i, int j) {
    if (n + 1 < 10) return "E_" + std::to_string(i) + std::to_string(j);
    return "E_" + std::to_string(i) + "_" + std::to_string(j);
  };
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      alg.basis.push_back(LieElement::unit(n, i, j));
      alg.names.push_back(unit_name(i, j));
    }
  }
  for (int i = 1; i <= n; ++i) {
    alg.basis.push_back(LieElement::coroot(n, i));
    alg.names.push_back("H_" + std::to_string(i));
  }
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j < i; ++j) {
      alg.basis.push_back(LieElement::unit(n, i, j));
      alg.names.push_back(unit_name(i, j));
    }
  }
  return alg;
}

// ---------------------------------------------------------------------------
// Generator parsing

namespace {

int parse_index(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("bad index in generator '" + std::string(whole) + "'");
  }
  return std::stoi(std::string(s));
}

std::pair<int, int> parse_pair(std::string_view s, std::string_view whole) {
  if (auto us = s.find('_'); us != std::string_view::npos) {
    return {parse_index(s.substr(0, us), whole), parse_index(s.substr(us + 1), whole)};
  }
  if (s.size() != 2) throw ParseError("ambiguous index pair in '" + std::string(whole) + "' (use E_i_j)");
  return {parse_index(s.substr(0, 1), whole), parse_index(s.substr(1, 1), whole)};
}

LieElement parse_atom(std::string_view atom, int n) {
  auto starts = [&](std::string_view p) { return atom.substr(0, p.size()) == p; };
  if (atom == "h") {
    std::vector<Scalar> d(n + 1, Scalar(-1, n));
    d[0] = 1;
    for (auto& v : d) v.canonicalize();
    return LieElement::diagonal(n, d);
  }
  if (n == 1 && atom == "e") return LieElement::unit(1, 1, 2);
  if (n == 1 && atom == "f") return LieElement::unit(1, 2, 1);
  if (starts("hA_")) {
    auto [r, s] = parse_pair(atom.substr(3), atom);
    if (r == s || r < 1 || s < 1 || r > n || s > n) throw SemanticError("hA index out of range: " + std::string(atom));
    return LieElement::unit(n, r + 1, s + 1);
  }
  if (starts("E_")) {
    auto [i, j] = parse_pair(atom.substr(2), atom);
    return LieElement::unit(n, i, j);
  }
  if (starts("H_")) return LieElement::coroot(n, parse_index(atom.substr(2), atom));
  if (starts("e_")) {
    int i = parse_index(atom.substr(2), atom);
    if (i < 1 || i > n) throw SemanticError("e_i index out of range: " + std::string(atom));
    return LieElement::unit(n, 1, i + 1);
  }
  if (starts("f_")) {
    int i = parse_index(atom.substr(2), atom);
    if (i < 1 || i > n) throw SemanticError("f_i index out of range: " + std::string(atom));
    return LieElement::unit(n, i + 1, 1);
  }
  throw ParseError("unknown generator '" + std::string(atom) + "'");
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

LieElement parse_element(std::string_view text, int n) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty generator expression");
  LieElement total(n);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    std::string_view chunk(s.data() + pos, end - pos);
    if (chunk.empty()) throw ParseError("malformed generator expression '" + std::string(text) + "'");
    Scalar coeff(sign);
    if (auto star = chunk.find('*'); star != std::string_view::npos) {
      coeff *= parse_scalar(chunk.substr(0, star));
      chunk = chunk.substr(star + 1);
    }
    total += coeff * parse_atom(chunk, n);
    pos = end;
  }
  return total;
}

// ---------------------------------------------------------------------------
// ParabolicData

bool ParabolicData::in_sigma(int simple) const { return std::binary_search(sigma.begin(), sigma.end(), simple); }

int ParabolicData::height(int i, int j) const {
  if (i == j) return 0;
  if (i > j) return -height(j, i);
  int h = 0;
  for (int k = i; k < j; ++k) {
    if (!in_sigma(k)) ++h;
  }
  return h;
}

std::optional<int> ParabolicData::alpha_index(const Root& r) const {
  auto it = std::find(delta_u.begin(), delta_u.end(), r);
  if (it == delta_u.end()) return std::nullopt;
  return static_cast<int>(it - delta_u.begin());
}

std::optional<int> ParabolicData::degree(const LieElement& x) const {
  std::optional<int> d;
  for (const auto& [idx, v] : x.entries()) {
    const int h = height(idx.first, idx.second);
    if (d && *d != h) return std::nullopt;
    d = h;
  }
  return d.value_or(0);
}

LieElement ParabolicData::project(const LieElement& x, Part part) const {
  if (x.rank() != n) throw SemanticError("rank mismatch in project");
  std::map<LieElement::Index, Scalar> kept;
  for (const auto& [idx, v] : x.entries()) {
    const int h = height(idx.first, idx.second);
    const bool keep = (part == Part::ubar && h < 0) || (part == Part::levi && h == 0) || (part == Part::u && h > 0) ||
                      (part == Part::p && h >= 0);
    if (keep) kept[idx] = v;
  }
  return LieElement::from_entries(n, kept);
}

Scalar ParabolicData::ubar_coordinate(const LieElement& x, int alpha) const {
  const Root& r = delta_u.at(alpha);
  return x.entry(r.j, r.i);
}

std::vector<LieElement> ParabolicData::p_basis() const {
  std::vector<LieElement> out = levi_basis;
  out.insert(out.end(), e_basis.begin(), e_basis.end());
  return out;
}

bool ParabolicData::is_first_maximal() const {
  if (static_cast<int>(sigma.size()) != n - 1) return false;
  for (int k = 2; k <= n; ++k) {
    if (!in_sigma(k)) return false;
  }
  return true;
}

ParabolicData parabolic_decompose(int n, const std::set<int>& sigma) {
  if (n < 1 || n > kMaxRank) throw std::length_error("unsupported rank " + std::to_string(n));
  ParabolicData pd;
  pd.n = n;
  for (int s : sigma) {
    if (s < 1 || s > n) throw SemanticError("simple root index " + std::to_string(s) + " not in 1.." + std::to_string(n));
    pd.sigma.push_back(s);
  }
  std::vector<std::tuple<int, int, int>> roots;
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      const int h = pd.height(i, j);
      if (h > 0) roots.emplace_back(h, i, j);
    }
  }
  std::sort(roots.begin(), roots.end());
  for (const auto& [h, i, j] : roots) {
    pd.delta_u.push_back({i, j});
    pd.f_basis.push_back(LieElement::unit(n, j, i));
    pd.e_basis.push_back(LieElement::unit(n, i, j));
  }
  pd.depth = pd.height(1, n + 1);
  for (int i = 1; i <= n; ++i) pd.levi_basis.push_back(LieElement::coroot(n, i));
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= n + 1; ++j) {
      if (i != j && pd.height(i, j) == 0) pd.levi_basis.push_back(LieElement::unit(n, i, j));
    }
  }
  return pd;
}

// ---------------------------------------------------------------------------
// LoopElement

LoopElement LoopElement::mode(const LieElement& a, int m) {
  LoopElement x(a.rank());
  if (!a.is_zero()) x.terms.emplace(m, a);
  return x;
}

LoopElement LoopElement::central_element(int n, const Scalar& coeff) {
  LoopElement x(n);
  x.central = coeff;
  return x;
}

LoopElement& LoopElement::operator+=(const LoopElement& other) {
  if (other.n != n) throw SemanticError("rank mismatch in loop algebra");
  for (const auto& [m, a] : other.terms) {
    auto [it, inserted] = terms.try_emplace(m, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  central += other.central;
  return *this;
}

LoopElement& LoopElement::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms.clear();
    central = 0;
    return *this;
  }
  for (auto& kv : terms) kv.second *= s;
  central *= s;
  return *this;
}

std::string LoopElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, a] : terms) {
    if (!first) os << " + ";
    os << "(" << a.to_string() << ")_" << m;
    first = false;
  }
  if (sgn(central) != 0) {
    if (!first) os << " + ";
    os << imverma::to_string(central) << "*c";
  }
  return os.str();
}

LoopElement loop_bracket(const LoopElement& x, const LoopElement& y) {
  if (x.n != y.n) throw SemanticError("rank mismatch in loop_bracket");
  LoopElement out(x.n);
  for (const auto& [m, a] : x.terms) {
    for (const auto& [k, b] : y.terms) {
      out += LoopElement::mode(bracket(a, b), m + k);
      if (m == -k) out += LoopElement::central_element(x.n, Scalar(m) * form(a, b));
    }
  }
  return out;
}

}  // namespace imverma
