#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "imverma/realization.hpp"
#include "imverma/sampling.hpp"

namespace imverma {

/// One bracket check outcome, for the record stream.
struct CheckRecord {
  bool pass = true;
  std::string a;
  std::string b;
  int m = 0;
  int n = 0;
  int state_id = 0;
};

struct BracketSweep {
  long basis_pairs = 0;
  long mode_pairs = 0;
  long states = 0;
  long checks = 0;
  long failures = 0;
  std::string witness;  ///< first failing check with its residual

  bool pass() const { return failures == 0; }
  /// "PASS 9 basis pairs × 49 mode pairs × 20 states" or a FAIL line.
  std::string summary() const;
};

/// Seeded sample states for sweeps.
std::vector<FockState> sample_states(const InducingModule& V, std::uint32_t seed, int count, int max_degree,
                                     int max_mode);

/// check_bracket over every ordered pair of the Chevalley basis, all |m|, |n| <= window,
/// and every state. `on_record` is called for each check when given.
BracketSweep bracket_sweep(const Realization& R, int window, const std::vector<FockState>& states,
                           const std::function<void(const CheckRecord&)>& on_record = {});

struct EngineComparison {
  std::string generator;
  bool structural = false;
  bool action = false;
  std::string detail;
};

/// General vs closed-form engine on the maximal parabolic of sl(n+1): structural
/// equality and action on the given states for modes |m| <= window. For n = 1
/// the closed forms are also compared with the sl(2) transcription.
std::vector<EngineComparison> compare_engines(const InducingModule& V, int window,
                                              const std::vector<FockState>& states);

struct WeightCell {
  std::string weight;  ///< e.g. "λ-2α1-α2"
  int mode = 0;
  int degree = 0;
  friend auto operator<=>(const WeightCell&, const WeightCell&) = default;
};

/// Counts b-monomials (x) v by (weight, total mode, degree) for degree <= max_degree
/// and variable modes in [-max_mode, max_mode]. V contributes its finite basis
/// (Heisenberg: only the vacuum).
std::map<WeightCell, long> weight_census(const InducingModule& V, int max_degree, int max_mode);
std::string weight_table(const std::map<WeightCell, long>& cells, const InducingModule& V, int max_degree,
                         int max_mode);

}  // namespace imverma
