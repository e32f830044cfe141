#include "imverma/inducing.hpp"

#include <sstream>

namespace imverma {

void add_to(VVector& v, const VBasis& b, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = v.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  }
}

std::string to_string(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::character:
      return "character";
    case ModuleKind::evaluation:
      return "evaluation";
    case ModuleKind::heisenberg_fock:
      return "heisenberg_fock";
  }
  return "?";
}

namespace {

/// Solves A x = b; free variables are set to zero. nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve_linear(Matrix a, std::vector<Scalar> b, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Scalar inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || sgn(a[q][c]) == 0) continue;
      const Scalar f = a[q][c];
      for (std::size_t k = 0; k < cols; ++k) a[q][k] -= f * a[r][k];
      b[q] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q) {
    if (sgn(b[q]) != 0) return std::nullopt;
  }
  std::vector<Scalar> x(cols, Scalar(0));
  for (std::size_t q = 0; q < r; ++q) x[pivot_col[q]] = b[q];
  return x;
}

Matrix zero_matrix(int d) { return Matrix(static_cast<std::size_t>(d), std::vector<Scalar>(static_cast<std::size_t>(d))); }

Matrix combine(const std::vector<Matrix>& mats, const std::vector<Scalar>& coeffs, int d) {
  Matrix out = zero_matrix(d);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) out[i][j] += coeffs[k] * mats[k][i][j];
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  const std::size_t d = a.size();
  Matrix out(d, std::vector<Scalar>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    }
  }
  return out;
}

void check_p_element(const ParabolicData& pd, const LieElement& x) {
  if (x.rank() != pd.n) throw SemanticError("element rank does not match the algebra");
  for (const auto& [ij, v] : x.entries()) {
    if (ij.first > ij.second && pd.height(ij.second, ij.first) > 0) {
      throw SemanticError("inducing module acts only on p; got " + x.to_string());
    }
  }
}

/// Blocks of consecutive indices joined by simple roots in Sigma.
std::vector<std::pair<int, int>> levi_blocks(const ParabolicData& pd) {
  std::vector<std::pair<int, int>> blocks;
  int start = 1;
  for (int i = 1; i <= pd.n; ++i) {
    if (!pd.in_sigma(i)) {
      blocks.emplace_back(start, i);
      start = i + 1;
    }
  }
  blocks.emplace_back(start, pd.n + 1);
  return blocks;
}

}  // namespace

std::vector<Scalar> levi_coordinates(const ParabolicData& pd, const LieElement& x) {
  std::vector<Scalar> out(pd.levi_basis.size());
  Scalar partial = 0;
  for (int i = 1; i <= pd.n; ++i) {
    partial += x.entry(i, i);
    out[static_cast<std::size_t>(i - 1)] = partial;
  }
  for (std::size_t k = static_cast<std::size_t>(pd.n); k < pd.levi_basis.size(); ++k) {
    const auto& [ij, one] = *pd.levi_basis[k].entries().begin();
    out[k] = x.entry(ij.first, ij.second);
  }
  return out;
}

std::vector<LieElement> levi_center_basis(const ParabolicData& pd) {
  const auto blocks = levi_blocks(pd);
  std::vector<LieElement> out;
  for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
    std::vector<Scalar> d(static_cast<std::size_t>(pd.n + 1));
    const auto [a0, a1] = blocks[b];
    const auto [b0, b1] = blocks[b + 1];
    for (int i = a0; i <= a1; ++i) d[static_cast<std::size_t>(i - 1)] = Scalar(1, a1 - a0 + 1);
    for (int i = b0; i <= b1; ++i) d[static_cast<std::size_t>(i - 1)] = Scalar(-1, b1 - b0 + 1);
    for (auto& v : d) v.canonicalize();
    out.push_back(LieElement::diagonal(pd.n, d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// InducingModule

std::optional<int> InducingModule::dim() const {
  switch (kind_) {
    case ModuleKind::character:
      return 1;
    case ModuleKind::evaluation:
      return eval_dim_;
    case ModuleKind::heisenberg_fock:
      return std::nullopt;
  }
  return std::nullopt;
}

bool InducingModule::mode_graded() const {
  switch (kind_) {
    case ModuleKind::character:
      for (const auto& [j, L] : character_functional) {
        if (j != 0 && !L.is_zero()) return false;
      }
      return true;
    case ModuleKind::evaluation:
      for (const auto& m : rho) {
        for (const auto& row : m) {
          for (const auto& x : row) {
            if (sgn(x) != 0) return false;
          }
        }
      }
      return true;
    case ModuleKind::heisenberg_fock:
      return true;
  }
  return false;
}

void InducingModule::validate(const VBasis& v) const {
  if (kind_ == ModuleKind::heisenberg_fock) {
    if (v.index != 0) throw SemanticError("heisenberg_fock V vectors have index 0");
    for (const Var& var : v.heis.vars()) {
      if (var.family < 0 || var.family >= pd_.n || var.mode >= 0) {
        throw SemanticError("invalid Heisenberg variable h(" + std::to_string(var.family) + "," +
                            std::to_string(var.mode) + ")");
      }
    }
    return;
  }
  if (!v.heis.empty()) throw SemanticError("vmonomial is only valid for heisenberg_fock");
  if (v.index < 0 || v.index >= eval_dim_) {
    throw SemanticError("V basis index " + std::to_string(v.index) + " out of range");
  }
}

VVector InducingModule::act(const LieElement& x, int mode, const VBasis& v) const {
  check_p_element(pd_, x);
  VVector out;
  switch (kind_) {
    case ModuleKind::character: {
      auto it = character_functional.find(mode);
      if (it != character_functional.end()) add_to(out, v, form(it->second, x));
      return out;
    }
    case ModuleKind::evaluation: {
      Scalar factor = 1;
      if (sgn(eval_point) == 0) {
        if (mode < 0) throw SemanticError("evaluation at s = 0 is undefined for negative modes");
        if (mode > 0) return out;
      } else {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), eval_point.get_num_mpz_t(), static_cast<unsigned long>(std::abs(mode)));
        mpz_pow_ui(den.get_mpz_t(), eval_point.get_den_mpz_t(), static_cast<unsigned long>(std::abs(mode)));
        factor = mode >= 0 ? Scalar(num, den) : Scalar(den, num);
        factor.canonicalize();
      }
      const auto coords = levi_coordinates(pd_, x);
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (sgn(coords[k]) == 0) continue;
        const Matrix& m = rho[k];
        for (int i = 0; i < eval_dim_; ++i) add_to(out, VBasis{i, {}}, factor * coords[k] * m[i][v.index]);
      }
      return out;
    }
    case ModuleKind::heisenberg_fock: {
      const auto coords = levi_coordinates(pd_, x);
      if (mode == 0) {
        Scalar s = 0;
        for (int i = 0; i < pd_.n; ++i) s += coords[i] * highest_weight[i];
        add_to(out, v, s);
      } else if (mode < 0) {
        for (int i = 0; i < pd_.n; ++i) {
          if (sgn(coords[i]) != 0) add_to(out, VBasis{v.index, v.heis.times(i, mode)}, coords[i]);
        }
      } else if (sgn(level_) != 0) {
        for (int l = 0; l < pd_.n; ++l) {
          const int e = v.heis.exponent(l, -mode);
          if (e == 0) continue;
          Scalar g = 0;
          for (int i = 0; i < pd_.n; ++i) g += coords[i] * gram[i][l];
          add_to(out, VBasis{v.index, v.heis.reduced(l, -mode)}, level_ * Scalar(mode) * g * Scalar(e));
        }
      }
      return out;
    }
  }
  return out;
}

std::optional<Scalar> InducingModule::v_weight(const VBasis& v, const LieElement& h) const {
  if (!h.is_diagonal()) throw SemanticError("weights are taken against diagonal elements");
  const VVector hv = act(h, 0, v);
  if (hv.empty()) return Scalar(0);
  if (hv.size() == 1 && hv.begin()->first == v) return hv.begin()->second;
  return std::nullopt;
}

std::string InducingModule::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << " module, level " << to_string(level_);
  if (kind_ == ModuleKind::evaluation) os << ", dim " << eval_dim_ << ", s = " << imverma::to_string(eval_point);
  return os.str();
}

// ---------------------------------------------------------------------------
// Constructors

InducingModule character_module(const ParabolicData& pd, const std::vector<CharacterAssignment>& assignments,
                                const Scalar& level) {
  if (sgn(level) != 0) throw SemanticError("character modules have level 0");
  const auto center = levi_center_basis(pd);
  const std::size_t r = center.size();
  Matrix gram(r, std::vector<Scalar>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) gram[a][b] = form(center[a], center[b]);
  }

  // Coordinates of each assigned x in the centre basis, grouped by mode.
  std::map<int, std::pair<Matrix, std::vector<Scalar>>> systems;
  for (const auto& as : assignments) {
    if (as.x.rank() != pd.n) throw SemanticError("assignment rank mismatch");
    if (is_zero(as.value)) continue;
    std::vector<Scalar> rhs(r);
    for (std::size_t a = 0; a < r; ++a) rhs[a] = form(center[a], as.x);
    const auto coords = r == 0 ? std::optional<std::vector<Scalar>>(std::vector<Scalar>{})
                               : solve_linear(gram, rhs, r);
    LieElement rebuilt(pd.n);
    if (coords) {
      for (std::size_t a = 0; a < r; ++a) rebuilt += (*coords)[a] * center[a];
    }
    if (!coords || !(rebuilt == as.x)) {
      throw SemanticError("character assignment on " + as.x.to_string() + " is not in the centre of l");
    }
    auto& [rows, vals] = systems[as.mode];
    rows.push_back(*coords);
    vals.push_back(as.value);
  }

  InducingModule V;
  V.kind_ = ModuleKind::character;
  V.pd_ = pd;
  V.level_ = level;
  V.eval_dim_ = 1;
  for (auto& [mode, sys] : systems) {
    // phi on the centre basis, then L with (L, z_a) = phi(z_a).
    const auto phi = solve_linear(sys.first, sys.second, r);
    if (!phi) throw SemanticError("inconsistent character assignments at mode " + std::to_string(mode));
    const auto lc = solve_linear(gram, *phi, r);
    LieElement L(pd.n);
    for (std::size_t a = 0; a < r; ++a) L += (*lc)[a] * center[a];
    if (!L.is_zero()) V.character_functional.emplace(mode, std::move(L));
  }
  return V;
}

InducingModule evaluation_module_unchecked(const ParabolicData& pd, std::vector<Matrix> rho, const Scalar& s,
                                           const Scalar& level) {
  if (sgn(level) != 0) {
    throw SemanticError("finite-dimensional evaluation modules must have level 0 (trace obstruction)");
  }
  if (rho.size() != pd.levi_basis.size()) {
    throw SemanticError("evaluation module needs one matrix per Levi basis element (" +
                        std::to_string(pd.levi_basis.size()) + ")");
  }
  const std::size_t d = rho.empty() ? 1 : rho.front().size();
  if (d == 0) throw SemanticError("evaluation module dimension must be positive");
  for (const auto& m : rho) {
    if (m.size() != d) throw SemanticError("evaluation matrices must share one square size");
    for (const auto& row : m) {
      if (row.size() != d) throw SemanticError("evaluation matrices must be square");
    }
  }
  InducingModule V;
  V.kind_ = ModuleKind::evaluation;
  V.pd_ = pd;
  V.level_ = level;
  V.eval_dim_ = static_cast<int>(d);
  V.rho = std::move(rho);
  V.eval_point = s;
  return V;
}

InducingModule evaluation_module(const ParabolicData& pd, std::vector<Matrix> rho, const Scalar& s,
                                 const Scalar& level) {
  InducingModule V = evaluation_module_unchecked(pd, std::move(rho), s, level);
  const int d = *V.dim();
  const auto& basis = pd.levi_basis;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const Matrix lhs = combine(V.rho, levi_coordinates(pd, bracket(basis[a], basis[b])), d);
      if (lhs != commutator(V.rho[a], V.rho[b])) {
        throw SemanticError("rho is not a representation of l: fails on [" + basis[a].to_string() + ", " +
                            basis[b].to_string() + "]");
      }
    }
  }
  return V;
}

std::vector<Matrix> block_natural_rep(const ParabolicData& pd, int first, int last) {
  if (first < 1 || last > pd.n + 1 || first > last) throw SemanticError("invalid Levi block");
  for (int i = first; i < last; ++i) {
    if (!pd.in_sigma(i)) throw SemanticError("indices are not in one Levi block");
  }
  const int d = last - first + 1;
  std::vector<Matrix> out;
  for (const auto& x : pd.levi_basis) {
    Matrix m = zero_matrix(d);
    for (const auto& [ij, v] : x.entries()) {
      if (ij.first >= first && ij.first <= last && ij.second >= first && ij.second <= last) {
        m[ij.first - first][ij.second - first] = v;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> block_natural_rep_at(const ParabolicData& pd, int row) {
  for (const auto& [a, b] : levi_blocks(pd)) {
    if (row >= a && row <= b) return block_natural_rep(pd, a, b);
  }
  throw SemanticError("row index out of range");
}

InducingModule heisenberg_fock(const ParabolicData& pd, std::vector<Scalar> lambda, const Scalar& level) {
  if (!pd.sigma.empty()) throw SemanticError("heisenberg_fock requires an empty Sigma (Levi = Cartan)");
  if (lambda.size() != static_cast<std::size_t>(pd.n)) {
    throw SemanticError("heisenberg_fock needs one highest-weight value per Cartan basis element");
  }
  InducingModule V;
  V.kind_ = ModuleKind::heisenberg_fock;
  V.pd_ = pd;
  V.level_ = level;
  V.eval_dim_ = 1;
  V.highest_weight = std::move(lambda);
  V.gram.assign(static_cast<std::size_t>(pd.n), std::vector<Scalar>(static_cast<std::size_t>(pd.n)));
  for (int i = 0; i < pd.n; ++i) {
    for (int j = 0; j < pd.n; ++j) V.gram[i][j] = form(pd.levi_basis[i], pd.levi_basis[j]);
  }
  return V;
}

// ---------------------------------------------------------------------------
// Axiom check

namespace {

VVector act_vector(const InducingModule& V, const LieElement& x, int mode, const VVector& in) {
  VVector out;
  for (const auto& [b, c] : in) {
    for (const auto& [b2, c2] : V.act(x, mode, b)) add_to(out, b2, c * c2);
  }
  return out;
}

std::string vvector_to_string(const VVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : v) {
    if (!first) os << " + ";
    os << "(" << to_string(c) << ") v" << b.index;
    if (!b.heis.empty()) os << "[" << b.heis.to_string("h") << "]";
    first = false;
  }
  return os.str();
}

}  // namespace

AxiomReport axiom_check(const InducingModule& V, int window, const std::vector<VBasis>& samples) {
  AxiomReport report;
  const auto basis = V.parabolic().p_basis();
  // Negative modes have no meaning for evaluation at s = 0.
  const int lo = V.kind() == ModuleKind::evaluation && sgn(V.eval_point) == 0 ? 0 : -window;
  for (const VBasis& v0 : samples) {
    const VVector start{{v0, Scalar(1)}};
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const LieElement br = bracket(basis[a], basis[b]);
        const Scalar pairing = form(basis[a], basis[b]);
        for (int m = lo; m <= window; ++m) {
          for (int n = lo; n <= window; ++n) {
            ++report.checks;
            VVector residual = act_vector(V, basis[a], m, act_vector(V, basis[b], n, start));
            for (const auto& [k, c] : act_vector(V, basis[b], n, act_vector(V, basis[a], m, start))) {
              add_to(residual, k, -c);
            }
            for (const auto& [k, c] : act_vector(V, br, m + n, start)) add_to(residual, k, -c);
            if (m == -n) add_to(residual, v0, -Scalar(m) * pairing * V.level());
            if (!residual.empty() && report.pass) {
              report.pass = false;
              std::ostringstream os;
              os << "[" << basis[a].to_string() << " (" << m << "), " << basis[b].to_string() << " (" << n
                 << ")] on v" << v0.index;
              if (!v0.heis.empty()) os << "[" << v0.heis.to_string("h") << "]";
              os << ": residual " << vvector_to_string(residual);
              report.witness = os.str();
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace imverma
