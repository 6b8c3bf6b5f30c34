// Thin bindings: expressions cross the boundary as text (x[i,r] notation) and
// verification reports as dicts.

#include "brm/cylnet.hpp"
#include "brm/formulas.hpp"
#include "brm/rmatrix.hpp"
#include "brm/serialize.hpp"
#include "brm/specialfn.hpp"
#include "brm/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace brm;

namespace {

py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::vector<std::string>> apply(int n, int m, const std::string& word, bool letters_first) {
  auto t = apply_word(symbolic_tuple<FactoredRational>(n, m), parse_word(word, letters_first));
  std::vector<std::vector<std::string>> out(m);
  for (int i = 1; i <= m; ++i)
    for (int r = 1; r <= n; ++r) out[i - 1].push_back(to_text(t.at(i, r).expand()));
  return out;
}

py::object verify(const std::string& suite, std::optional<int> n, std::optional<int> m, int max_n,
                  int max_m, const std::string& mode, std::uint64_t seed, int points) {
  VerifyConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.max_n = max_n;
  cfg.max_m = max_m;
  cfg.mode = parse_mode(mode);
  cfg.seed = seed;
  cfg.points = points;
  return from_json(run_suite(suite, cfg).to_json());
}

std::vector<std::vector<std::string>> families(const std::string& kind, int n, int m, long long r, int k,
                                               bool at_most) {
  FamilyClass c = kind == "omega" ? omega_class(n, m, r)
                                  : tau_class(n, m, r, k, at_most ? DegreeMode::AtMost : DegreeMode::Exact);
  std::vector<std::vector<std::string>> out;
  for (const auto& f : enumerate_families(c)) {
    std::vector<std::string> row;
    for (const auto& p : f.paths) row.push_back(std::to_string(p.source) + ":" + p.step_string());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_brm, mod) {
  py::register_exception<GuardExceeded>(mod, "GuardExceeded");

  mod.def("apply", &apply, py::arg("n"), py::arg("m"), py::arg("word"), py::arg("letters_first") = false);
  mod.def("parse_word", &parse_word, py::arg("text"), py::arg("letters_first") = false);
  mod.def("reduced_word", &reduced_word);

  mod.def("tau", [](int n, int i, int j, long long k, long long r) { return to_text(tau(n, i, j, k, r)); });
  mod.def("sigma", [](int n, int i, int j, long long k, long long r) { return to_text(sigma(n, i, j, k, r)); });
  mod.def("sigma_bar",
          [](int n, int i, int j, long long k, long long r) { return to_text(sigma_bar(n, i, j, k, r)); });
  mod.def("omega", [](int n, int i, int j, int cut, long long r) { return to_text(omega(n, i, j, cut, r)); });
  mod.def("p", [](int n, int i, int j, long long k, long long r) { return to_text(p_fn(n, i, j, k, r)); });

  mod.def("trans_action", [](int n, int i, int j, int k, long long r) {
    return to_text(trans_action(n, i, j, k, r).expand());
  });
  mod.def("trans_action_dual", [](int n, int i, int j, int k, long long r) {
    return to_text(trans_action_dual(n, i, j, k, r).expand());
  });

  mod.def("families", &families, py::arg("kind"), py::arg("n"), py::arg("m"), py::arg("r"), py::arg("k") = 0,
          py::arg("at_most") = false);
  mod.def("gen_tau", [](int n, int m, long long r, int k) { return to_text(gen_tau(n, m, r, k)); });
  mod.def("gen_omega", [](int n, int m, long long r, int cut) { return to_text(gen_omega(n, m, r, cut)); });

  mod.def("suites", &suite_names);
  mod.def("verify", &verify, py::arg("suite"), py::arg("n") = py::none(), py::arg("m") = py::none(),
          py::arg("max_n") = 3, py::arg("max_m") = 3, py::arg("mode") = "symbolic", py::arg("seed") = 1,
          py::arg("points") = 20);

  mod.def("equal", [](const std::string& a, const std::string& b) {
    return rf_eq(parse_rational(a), parse_rational(b));
  });
}
