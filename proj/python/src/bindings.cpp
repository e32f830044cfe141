// Python bindings. Rationals cross the boundary as "p/q" strings and states as
// the canonical JSON text, so nothing here depends on a Python rational type.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "imverma/config.hpp"
#include "imverma/formal_dist.hpp"
#include "imverma/sweeps.hpp"

namespace py = pybind11;
using namespace imverma;

namespace {

std::vector<Scalar> parse_scalars(const std::vector<std::string>& xs) {
  std::vector<Scalar> out;
  for (const auto& x : xs) out.push_back(parse_scalar(x));
  return out;
}

std::shared_ptr<const InducingModule> share(InducingModule V) {
  return std::make_shared<const InducingModule>(std::move(V));
}

/// Realization together with its inducing module.
struct PyRealization {
  std::shared_ptr<const InducingModule> V;
  std::shared_ptr<Realization> R;

  int n() const { return V->parabolic().n; }

  std::string act(const std::string& gen, int m, const std::string& state) const {
    const FockState s = state.empty() ? vacuum(0) : state_from_json(state, static_cast<int>(V->parabolic().num_roots()));
    if (gen == "c") return state_to_json(R->act_central(s));
    return state_to_json(R->act(parse_element(gen, n()), m, s));
  }

  std::string dump(const std::string& gen) const { return R->op(parse_element(gen, n()))->dump(); }

  bool check_bracket(const std::string& a, const std::string& b, int m, int k, const std::string& state) const {
    const FockState s = state.empty() ? vacuum(0) : state_from_json(state);
    return R->check_bracket(parse_element(a, n()), parse_element(b, n()), m, k, s).pass;
  }

  py::dict sweep(int window, int samples, int max_degree, std::uint32_t seed) const {
    const auto states = sample_states(*V, seed, samples, max_degree, window);
    const BracketSweep s = bracket_sweep(*R, window, states);
    py::dict d;
    d["pass"] = s.pass();
    d["checks"] = s.checks;
    d["failures"] = s.failures;
    d["summary"] = s.summary();
    d["witness"] = s.witness;
    return d;
  }

  void inject_sign_flip(const std::string& gen, std::size_t index) { R->inject_sign_flip(parse_element(gen, n()), index); }
};

PyRealization make(std::shared_ptr<const InducingModule> V, Engine engine) {
  PyRealization r;
  r.V = V;
  r.R = std::make_shared<Realization>(V, engine);
  return r;
}

Engine engine_from(const std::string& name) {
  if (name == "general") return Engine::general;
  if (name == "explicit_sl" || name == "explicit") return Engine::explicit_sl;
  if (name == "explicit_sl2") return Engine::explicit_sl2;
  throw ParseError("unknown engine " + name);
}

}  // namespace

PYBIND11_MODULE(_imverma, m) {
  m.doc() = "Free field realizations of affine sl(n+1) on generalized imaginary Verma modules";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);

  m.def("bracket", [](const std::string& a, const std::string& b, int n) {
    return bracket(parse_element(a, n), parse_element(b, n)).to_string();
  });
  m.def("form", [](const std::string& a, const std::string& b, int n) {
    return to_string(form(parse_element(a, n), parse_element(b, n)));
  });
  m.def("killing_form", [](const std::string& a, const std::string& b, int n) {
    return to_string(killing_form(parse_element(a, n), parse_element(b, n)));
  });
  m.def("bernoulli", [](int k) { return to_string(bernoulli(k)); });
  m.def("delta_selftest", [](int radius) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& c : delta_selftest(radius)) out.emplace_back(c.name, c.pass);
    return out;
  }, py::arg("radius") = 8);
  m.def("delta_u", [](int n, const std::set<int>& sigma) {
    std::vector<std::pair<int, int>> out;
    for (const auto& r : parabolic_decompose(n, sigma).delta_u) out.emplace_back(r.i, r.j);
    return out;
  });

  py::class_<PyRealization>(m, "Realization")
      .def("act", &PyRealization::act, py::arg("generator"), py::arg("mode") = 0, py::arg("state") = "")
      .def("dump", &PyRealization::dump)
      .def("check_bracket", &PyRealization::check_bracket, py::arg("a"), py::arg("b"), py::arg("m"),
           py::arg("n"), py::arg("state") = "")
      .def("sweep", &PyRealization::sweep, py::arg("window") = 3, py::arg("samples") = 20,
           py::arg("max_degree") = 3, py::arg("seed") = 1)
      .def("inject_sign_flip", &PyRealization::inject_sign_flip)
      .def_property_readonly("level", [](const PyRealization& r) { return to_string(r.V->level()); })
      .def_property_readonly("describe", [](const PyRealization& r) { return r.V->describe(); });

  m.def("from_config", [](const std::string& text) {
    const JobConfig cfg = parse_config(text);
    const ParabolicData pd = make_parabolic(cfg);
    return make(make_module(cfg, pd), make_engine(cfg, pd));
  }, "Builds a realization from a JSON job config string.");

  m.def("heisenberg", [](int n, const std::vector<std::string>& lambda, const std::string& level,
                         const std::string& engine) {
    const auto pd = parabolic_decompose(n, {});
    return make(share(heisenberg_fock(pd, parse_scalars(lambda), parse_scalar(level))), engine_from(engine));
  }, py::arg("n"), py::arg("lambda_"), py::arg("level"), py::arg("engine") = "general");

  m.def("character", [](int n, const std::set<int>& sigma,
                        const std::vector<std::tuple<std::string, int, std::string>>& assignments,
                        const std::string& engine) {
    const auto pd = parabolic_decompose(n, sigma);
    std::vector<CharacterAssignment> as;
    for (const auto& [x, mode, v] : assignments) as.push_back({parse_element(x, n), mode, parse_scalar(v)});
    return make(share(character_module(pd, as)), engine_from(engine));
  }, py::arg("n"), py::arg("sigma"), py::arg("assignments") = std::vector<std::tuple<std::string, int, std::string>>{},
     py::arg("engine") = "general");

  m.def("evaluation", [](int n, const std::set<int>& sigma, int block_row, const std::string& s,
                         const std::string& level, const std::string& engine) {
    const auto pd = parabolic_decompose(n, sigma);
    return make(share(evaluation_module(pd, block_natural_rep_at(pd, block_row), parse_scalar(s), parse_scalar(level))),
                engine_from(engine));
  }, py::arg("n"), py::arg("sigma"), py::arg("block_row"), py::arg("s") = "1", py::arg("level") = "0",
     py::arg("engine") = "general");
}
