#include "imverma/config.hpp"

#include <fstream>
#include <sstream>

namespace imverma {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return j[key].get<int>();
}

Scalar get_scalar(const json& j, const char* key, const Scalar& fallback) {
  if (!j.contains(key)) return fallback;
  if (j[key].is_string()) return parse_scalar(j[key].get<std::string>());
  if (j[key].is_number_integer()) return Scalar(j[key].get<long>());
  throw ParseError(std::string("\"") + key + "\" must be a rational string like \"p/q\"");
}

Scalar scalar_value(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("expected a rational string like \"p/q\"");
}

ModuleKind parse_kind(const std::string& s) {
  if (s == "character") return ModuleKind::character;
  if (s == "evaluation") return ModuleKind::evaluation;
  if (s == "heisenberg_fock" || s == "heisenberg") return ModuleKind::heisenberg_fock;
  throw ParseError("unknown module kind \"" + s + "\"");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

JobConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  JobConfig cfg;
  try {
    if (!j.contains("algebra") || !j["algebra"].is_object()) throw ParseError("config needs an \"algebra\" section");
    const json& alg = j["algebra"];
    cfg.n = get_int(alg, "n", 1);
    if (alg.contains("sigma")) {
      if (!alg["sigma"].is_array()) throw ParseError("\"sigma\" must be a list of integers");
      for (const json& s : alg["sigma"]) {
        if (!s.is_number_integer()) throw ParseError("\"sigma\" must be a list of integers");
        cfg.sigma.insert(s.get<int>());
      }
    }
    if (j.contains("module")) {
      const json& mod = j["module"];
      if (!mod.is_object()) throw ParseError("\"module\" must be an object");
      if (mod.contains("kind")) {
        if (!mod["kind"].is_string()) throw ParseError("module kind must be a string");
        cfg.kind = parse_kind(mod["kind"].get<std::string>());
      }
      cfg.level = get_scalar(mod, "level", Scalar(0));
      if (mod.contains("params")) {
        if (!mod["params"].is_object()) throw ParseError("module params must be an object");
        cfg.params = mod["params"];
      }
    }
    if (j.contains("engine")) {
      if (!j["engine"].is_string()) throw ParseError("\"engine\" must be a string");
      cfg.engine = j["engine"].get<std::string>();
      if (cfg.engine != "general" && cfg.engine != "explicit") {
        throw ParseError("engine must be \"general\" or \"explicit\"");
      }
    }
    if (j.contains("window")) {
      const json& w = j["window"];
      if (!w.is_object()) throw ParseError("\"window\" must be an object");
      cfg.max_mode = get_int(w, "max_mode", cfg.max_mode);
      cfg.max_degree = get_int(w, "max_degree", cfg.max_degree);
      cfg.samples = get_int(w, "samples", cfg.samples);
    }
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned()) throw ParseError("\"seed\" must be a non-negative integer");
      cfg.seed = j["seed"].get<std::uint32_t>();
    }
    if (j.contains("output")) {
      if (!j["output"].is_string()) throw ParseError("\"output\" must be \"text\" or \"records\"");
      const auto o = j["output"].get<std::string>();
      if (o == "text") {
        cfg.output = OutputMode::text;
      } else if (o == "records") {
        cfg.output = OutputMode::records;
      } else {
        throw ParseError("\"output\" must be \"text\" or \"records\"");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (cfg.max_mode < 0 || cfg.max_degree < 0 || cfg.samples < 0) {
    throw SemanticError("window values must be non-negative");
  }
  return cfg;
}

JobConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

ParabolicData make_parabolic(const JobConfig& cfg) {
  build_sl(cfg.n);  // sizing check
  for (int s : cfg.sigma) {
    if (s < 1 || s > cfg.n) throw SemanticError("sigma index " + std::to_string(s) + " outside 1.." + std::to_string(cfg.n));
  }
  return parabolic_decompose(cfg.n, cfg.sigma);
}

std::shared_ptr<const InducingModule> make_module(const JobConfig& cfg, const ParabolicData& pd) {
  const json& p = cfg.params;
  try {
    switch (cfg.kind) {
      case ModuleKind::character: {
        std::vector<CharacterAssignment> as;
        if (p.contains("assignments")) {
          if (!p["assignments"].is_array()) throw ParseError("\"assignments\" must be a list");
          for (const json& a : p["assignments"]) {
            if (!a.is_object() || !a.contains("x") || !a["x"].is_string() || !a.contains("value")) {
              throw ParseError("assignment needs \"x\" (generator name) and \"value\"");
            }
            as.push_back({parse_element(a["x"].get<std::string>(), pd.n), get_int(a, "mode", 0), scalar_value(a["value"])});
          }
        }
        return std::make_shared<const InducingModule>(character_module(pd, as, cfg.level));
      }
      case ModuleKind::evaluation: {
        const Scalar s = get_scalar(p, "s", Scalar(1));
        std::vector<Matrix> rho;
        if (p.contains("block_row")) {
          rho = block_natural_rep_at(pd, get_int(p, "block_row", 1));
        } else if (p.contains("matrices")) {
          if (!p["matrices"].is_array()) throw ParseError("\"matrices\" must be a list of matrices");
          for (const json& m : p["matrices"]) {
            if (!m.is_array()) throw ParseError("each matrix must be a list of rows");
            Matrix mat;
            for (const json& row : m) {
              if (!row.is_array()) throw ParseError("each matrix row must be a list");
              std::vector<Scalar> r;
              for (const json& x : row) r.push_back(scalar_value(x));
              mat.push_back(std::move(r));
            }
            rho.push_back(std::move(mat));
          }
        } else {
          rho.assign(pd.levi_basis.size(), Matrix{{Scalar(0)}});
        }
        return std::make_shared<const InducingModule>(evaluation_module(pd, std::move(rho), s, cfg.level));
      }
      case ModuleKind::heisenberg_fock: {
        std::vector<Scalar> lambda(static_cast<std::size_t>(pd.n));
        if (p.contains("lambda")) {
          if (!p["lambda"].is_array()) throw ParseError("\"lambda\" must be a list of rationals");
          lambda.clear();
          for (const json& x : p["lambda"]) lambda.push_back(scalar_value(x));
        }
        return std::make_shared<const InducingModule>(heisenberg_fock(pd, std::move(lambda), cfg.level));
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("module params: ") + e.what());
  }
  throw SemanticError("unsupported module kind");
}

Engine make_engine(const JobConfig& cfg, const ParabolicData& pd) {
  if (cfg.engine == "general") return Engine::general;
  if (!pd.is_first_maximal()) {
    throw SemanticError("the explicit engine needs sigma = {2, ..., n} (or n = 1 with empty sigma)");
  }
  return Engine::explicit_sl;
}

}  // namespace imverma
