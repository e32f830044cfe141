#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "imverma/inducing.hpp"
#include "imverma/lie.hpp"
#include "imverma/realization.hpp"
#include "json.hpp"

namespace imverma {

enum class OutputMode { text, records };

/// Job description read from a JSON config file:
///   {"algebra": {"n": 2, "sigma": [2]},
///    "module": {"kind": "evaluation", "level": "0", "params": {...}},
///    "engine": "general", "window": {"max_mode": 3, "max_degree": 3, "samples": 20},
///    "seed": 1, "output": "text"}
struct JobConfig {
  int n = 1;
  std::set<int> sigma;
  ModuleKind kind = ModuleKind::character;
  Scalar level;
  nlohmann::json params = nlohmann::json::object();
  std::string engine = "general";
  int max_mode = 3;
  int max_degree = 3;
  int samples = 20;
  std::uint32_t seed = 1;
  OutputMode output = OutputMode::text;
};

/// Throws ParseError for malformed JSON or wrong field types, SemanticError
/// for values inconsistent with the algebra.
JobConfig parse_config(const std::string& text);
JobConfig load_config(const std::string& path);

ParabolicData make_parabolic(const JobConfig& cfg);
/// Module params by kind:
///   character:        {"assignments": [{"x": "h", "mode": 0, "value": "3/2"}, ...]}
///   evaluation:       {"s": "1", "block_row": 2} or {"s": "1", "matrices": [[["0","1"],...], ...]}
///                     (no rep given: the one-dimensional zero representation)
///   heisenberg_fock:  {"lambda": ["1", ...]} (defaults to zeros)
std::shared_ptr<const InducingModule> make_module(const JobConfig& cfg, const ParabolicData& pd);
Engine make_engine(const JobConfig& cfg, const ParabolicData& pd);

std::string read_file(const std::string& path);

}  // namespace imverma
