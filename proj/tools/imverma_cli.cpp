// Command-line driver. Exit codes: 0 pass, 1 identity failure, 2 parse error,
// 3 semantic error.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "imverma/config.hpp"
#include "imverma/formal_dist.hpp"
#include "imverma/sweeps.hpp"
#include "json.hpp"

namespace {

using namespace imverma;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kParse = 2;
constexpr int kSemantic = 3;

struct Job {
  JobConfig cfg;
  ParabolicData pd;
  std::shared_ptr<const InducingModule> V;
  Engine engine;
};

Job load_job(const std::string& path) {
  Job job;
  job.cfg = load_config(path);
  job.pd = make_parabolic(job.cfg);
  job.V = make_module(job.cfg, job.pd);
  job.engine = make_engine(job.cfg, job.pd);
  return job;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw SemanticError("cannot write " + path);
  out << text;
}

int cmd_act(const std::string& config, const std::string& generator, int mode, const std::string& state_path,
            const std::string& out_path) {
  const Job job = load_job(config);
  FockState s = state_path.empty() ? vacuum(0)
                                   : state_from_json(read_file(state_path), static_cast<int>(job.pd.num_roots()));
  for (const auto& [key, c] : s.terms()) job.V->validate(key.v);
  Realization R(job.V, job.engine);
  FockState result;
  if (generator == "c") {
    result = R.act_central(s);
  } else {
    result = R.act(parse_element(generator, job.pd.n), mode, s);
  }
  write_output(out_path, state_to_json(result));
  return kPass;
}

int cmd_check_bracket(const std::string& config, const std::string& inject) {
  const Job job = load_job(config);
  Realization R(job.V, job.engine);
  if (!inject.empty()) {
    const auto colon = inject.rfind(':');
    if (colon == std::string::npos) throw ParseError("--inject expects GENERATOR:TERM_INDEX");
    const LieElement g = parse_element(inject.substr(0, colon), job.pd.n);
    std::size_t index = 0;
    try {
      index = std::stoul(inject.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("--inject term index must be a non-negative integer");
    }
    const auto op = R.op(g);
    if (index >= op->terms.size()) throw SemanticError("--inject term index out of range");
    std::cout << "injected sign flip into term " << index << " of pi(" << g.to_string()
              << "): " << op->terms[index].dump() << "\n";
    R.inject_sign_flip(g, index);
  }
  const auto states = sample_states(*job.V, job.cfg.seed, job.cfg.samples, job.cfg.max_degree, job.cfg.max_mode);
  std::function<void(const CheckRecord&)> on_record;
  if (job.cfg.output == OutputMode::records) {
    on_record = [](const CheckRecord& r) {
      nlohmann::json j{{"status", r.pass ? "pass" : "fail"}, {"a", r.a}, {"b", r.b}, {"m", r.m}, {"n", r.n},
                       {"state", r.state_id}};
      std::cout << j.dump() << "\n";
    };
  }
  const BracketSweep sweep = bracket_sweep(R, job.cfg.max_mode, states, on_record);
  std::cout << sweep.summary() << "\n";
  if (!sweep.pass()) {
    std::cout << "witness: " << sweep.witness << "\n";
    return kFail;
  }
  return kPass;
}

int cmd_compare_engines(const std::string& config, bool dump) {
  const Job job = load_job(config);
  const auto states = sample_states(*job.V, job.cfg.seed, job.cfg.samples, job.cfg.max_degree, job.cfg.max_mode);
  const auto results = compare_engines(*job.V, job.cfg.max_mode, states);
  bool ok = true;
  for (const auto& r : results) {
    const bool agree = r.structural && r.action;
    ok = ok && agree;
    std::cout << (agree ? "AGREE " : "DIFFER ") << r.generator << " structural=" << (r.structural ? "yes" : "no")
              << " action=" << (r.action ? "yes" : "no") << "\n";
    if (!agree && !r.detail.empty()) std::cout << r.detail << "\n";
    if (dump) {
      for (const auto& [name, g] : explicit_generators(job.pd.n)) {
        if (name == r.generator) std::cout << build_operator_explicit_sl(g, job.pd).dump();
      }
    }
  }
  std::cout << (ok ? "PASS " : "FAIL ") << results.size() << " generators\n";
  return ok ? kPass : kFail;
}

int cmd_weights(const std::string& config) {
  const Job job = load_job(config);
  const auto cells = weight_census(*job.V, job.cfg.max_degree, job.cfg.max_mode);
  std::cout << weight_table(cells, *job.V, job.cfg.max_degree, job.cfg.max_mode);
  return kPass;
}

int cmd_delta_selftest(int radius) {
  bool ok = true;
  for (const auto& c : delta_selftest(radius)) {
    ok = ok && c.pass;
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_dump(const std::string& config, const std::string& generator) {
  const Job job = load_job(config);
  Realization R(job.V, job.engine);
  std::cout << R.op(parse_element(generator, job.pd.n))->dump();
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free field realizations of affine sl(n+1) on generalized imaginary Verma modules"};
  app.require_subcommand(1);

  std::string config, generator, state_path, out_path, inject;
  int mode = 0;
  int radius = 8;
  bool dump = false;

  auto* act = app.add_subcommand("act", "Apply pi(a_m) (or c) to a state file");
  act->add_option("-c,--config", config, "Job config (JSON)")->required();
  act->add_option("-g,--generator", generator, "Generator, e.g. f_1, h, E_13, 2*E_12 - H_1, or c")->required();
  act->add_option("-m,--mode", mode, "Mode m");
  act->add_option("-s,--state", state_path, "Input state file (default: vacuum 1 (x) v_0)");
  act->add_option("-o,--out", out_path, "Output state file (default: stdout)");

  auto* check = app.add_subcommand("check-bracket", "Sweep the homomorphism identity over basis pairs and modes");
  check->add_option("-c,--config", config, "Job config (JSON)")->required();
  check->add_option("--inject", inject, "Test hook: negate one operator term, GENERATOR:TERM_INDEX");

  auto* compare = app.add_subcommand("compare-engines", "General series engine vs closed forms");
  compare->add_option("-c,--config", config, "Job config (JSON)")->required();
  compare->add_flag("--dump", dump, "Print the canonical closed-form operators");

  auto* weights = app.add_subcommand("weights", "Window-truncated weight census");
  weights->add_option("-c,--config", config, "Job config (JSON)")->required();

  auto* delta = app.add_subcommand("delta-selftest", "Delta-function identities");
  delta->add_option("-r,--radius", radius, "Mode window |m| <= radius");

  auto* dump_cmd = app.add_subcommand("dump", "Print the canonical operator pi(a)");
  dump_cmd->add_option("-c,--config", config, "Job config (JSON)")->required();
  dump_cmd->add_option("-g,--generator", generator, "Generator")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*act) return cmd_act(config, generator, mode, state_path, out_path);
    if (*check) return cmd_check_bracket(config, inject);
    if (*compare) return cmd_compare_engines(config, dump);
    if (*weights) return cmd_weights(config);
    if (*delta) return cmd_delta_selftest(radius);
    if (*dump_cmd) return cmd_dump(config, generator);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kPass;
}
