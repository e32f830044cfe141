#include "imverma/sweeps.hpp"

#include <sstream>

namespace imverma {

std::string BracketSweep::summary() const {
  std::ostringstream os;
  os << (pass() ? "PASS " : "FAIL ") << basis_pairs << " basis pairs × " << mode_pairs << " mode pairs × " << states
     << " states";
  if (!pass()) os << " (" << failures << " of " << checks << " checks failed)";
  return os.str();
}

std::vector<FockState> sample_states(const InducingModule& V, std::uint32_t seed, int count, int max_degree,
                                     int max_mode) {
  Sampler sampler(seed);
  std::vector<FockState> out;
  for (int i = 0; i < count; ++i) out.push_back(sampler.state(V, max_degree, max_mode));
  return out;
}

BracketSweep bracket_sweep(const Realization& R, int window, const std::vector<FockState>& states,
                           const std::function<void(const CheckRecord&)>& on_record) {
  const SlAlgebra alg = build_sl(R.parabolic().n);
  BracketSweep sweep;
  sweep.basis_pairs = static_cast<long>(alg.dim() * alg.dim());
  sweep.mode_pairs = static_cast<long>((2 * window + 1) * (2 * window + 1));
  sweep.states = static_cast<long>(states.size());
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      for (int m = -window; m <= window; ++m) {
        for (int n = -window; n <= window; ++n) {
          for (std::size_t s = 0; s < states.size(); ++s) {
            const BracketCheck r = R.check_bracket(alg.basis[a], alg.basis[b], m, n, states[s]);
            ++sweep.checks;
            if (!r.pass) {
              if (sweep.failures == 0) {
                std::ostringstream os;
                os << "[" << alg.name_of(a) << "(" << m << "), " << alg.name_of(b) << "(" << n << ")] on state #" << s
                   << " " << states[s].to_string() << ": residual " << r.residual.to_string();
                sweep.witness = os.str();
              }
              ++sweep.failures;
            }
            if (on_record) on_record({r.pass, alg.name_of(a), alg.name_of(b), m, n, static_cast<int>(s)});
          }
        }
      }
    }
  }
  return sweep;
}

std::vector<EngineComparison> compare_engines(const InducingModule& V, int window,
                                              const std::vector<FockState>& states) {
  const ParabolicData& pd = V.parabolic();
  if (!pd.is_first_maximal()) throw SemanticError("engine comparison needs the maximal parabolic sigma = {2, ..., n}");
  std::vector<EngineComparison> out;
  for (const auto& [name, g] : explicit_generators(pd.n)) {
    EngineComparison c;
    c.generator = name;
    const auto general = build_operator_general(g, pd);
    const auto closed = build_operator_explicit_sl(g, pd);
    c.structural = structurally_equal(general, closed);
    if (pd.n == 1) {
      const auto sl2 = build_operator_explicit_sl2(g, pd);
      if (!structurally_equal(closed, sl2)) {
        c.structural = false;
        c.detail = "closed form differs from the sl(2) transcription";
      }
    }
    c.action = true;
    for (int m = -window; m <= window && c.action; ++m) {
      for (std::size_t s = 0; s < states.size(); ++s) {
        const FockState lhs = apply(general, m, states[s], V);
        const FockState rhs = apply(closed, m, states[s], V);
        if (lhs != rhs) {
          c.action = false;
          std::ostringstream os;
          os << "m = " << m << ", state #" << s << ": general " << lhs.to_string() << " vs closed form "
             << rhs.to_string();
          c.detail = os.str();
          break;
        }
      }
    }
    if (!c.structural && c.detail.empty()) {
      c.detail = "general:\n" + general.dump() + "closed form:\n" + closed.dump();
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

/// Root-lattice offset -sum over the monomial, as coefficients of alpha_1..alpha_n.
std::string weight_label(const Monomial& mono, const ParabolicData& pd, const std::string& base) {
  std::vector<int> c(static_cast<std::size_t>(pd.n), 0);
  for (const Var& v : mono.vars()) {
    const Root& r = pd.delta_u[static_cast<std::size_t>(v.family)];
    for (int k = r.i; k < r.j; ++k) c[static_cast<std::size_t>(k - 1)] += v.exp;
  }
  std::string s = base;
  for (int k = 1; k <= pd.n; ++k) {
    const int x = c[static_cast<std::size_t>(k - 1)];
    if (x == 0) continue;
    s += "-";
    if (x != 1) s += std::to_string(x);
    s += "α" + std::to_string(k);
  }
  return s;
}

void enumerate(const std::vector<std::pair<int, int>>& vars, std::size_t start, int remaining, Monomial& cur,
               const std::function<void(const Monomial&)>& visit) {
  visit(cur);
  if (remaining == 0) return;
  for (std::size_t i = start; i < vars.size(); ++i) {
    Monomial next = cur.times(vars[i].first, vars[i].second);
    enumerate(vars, i, remaining - 1, next, visit);
  }
}

}  // namespace

std::map<WeightCell, long> weight_census(const InducingModule& V, int max_degree, int max_mode) {
  const ParabolicData& pd = V.parabolic();
  std::vector<std::pair<int, int>> vars;
  for (int a = 0; a < static_cast<int>(pd.num_roots()); ++a) {
    for (int m = -max_mode; m <= max_mode; ++m) vars.emplace_back(a, m);
  }
  std::vector<std::pair<VBasis, std::string>> vs;
  const int dim = V.dim().value_or(1);
  for (int i = 0; i < dim; ++i) vs.emplace_back(VBasis{i, {}}, dim == 1 ? "λ" : "λ[v" + std::to_string(i) + "]");
  std::map<WeightCell, long> cells;
  for (const auto& [v, base] : vs) {
    Monomial empty;
    enumerate(vars, 0, max_degree, empty, [&](const Monomial& mono) {
      ++cells[WeightCell{weight_label(mono, pd, base), mono.mode_sum() + v_mode(v), mono.degree()}];
    });
  }
  return cells;
}

std::string weight_table(const std::map<WeightCell, long>& cells, const InducingModule& V, int max_degree,
                         int max_mode) {
  std::ostringstream os;
  os << "# weight census of Pol (x) V: degree <= " << max_degree << ", variable modes in [" << -max_mode << ", "
     << max_mode << "]\n";
  os << "# window-truncated: the true weight spaces are infinite-dimensional; counts cover only this window\n";
  if (V.kind() == ModuleKind::heisenberg_fock) os << "# V = Heisenberg Fock module, counted at its vacuum only\n";
  os << "weight\tmode\tdegree\tcount\n";
  for (const auto& [cell, count] : cells) {
    os << cell.weight << "\t" << cell.mode << "\t" << cell.degree << "\t" << count << "\n";
  }
  std::map<std::pair<std::string, int>, long> totals;
  for (const auto& [cell, count] : cells) totals[{cell.weight, cell.degree}] += count;
  os << "# totals over the mode window\n";
  os << "weight\tdegree\tcount\n";
  for (const auto& [key, count] : totals) os << key.first << "\t" << key.second << "\t" << count << "\n";
  return os.str();
}

}  // namespace imverma
