#include <algorithm>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catconf/catalecticant.hpp"
#include "catconf/formulas.hpp"
#include "catconf/io.hpp"
#include "catconf/monodromy.hpp"
#include "catconf/systems.hpp"

namespace py = pybind11;
using namespace catconf;

namespace {

py::dict rank_report_dict(const RankReport& rep) {
  py::dict d;
  d["shape"] = py::make_tuple(rep.rows, rep.cols);
  d["rank"] = rep.rank;
  d["sigma"] = rep.sigma;
  d["gap"] = rep.gap;
  d["memberships"] = rep.memberships;
  return d;
}

PolyVector polyvector_from_lists(int n, const std::vector<int>& degrees,
                                 const std::vector<std::vector<Complex>>& forms) {
  if (degrees.size() != forms.size())
    throw std::invalid_argument("degrees and forms must have the same length");
  PolyVector f;
  f.n = n;
  for (size_t j = 0; j < forms.size(); ++j) {
    Poly p(n, degrees[j]);
    if (static_cast<int>(forms[j].size()) != monomials(n, degrees[j]).size())
      throw std::invalid_argument("coefficient count does not match the degree");
    p.coeffs = forms[j];
    f.forms.push_back(std::move(p));
  }
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Derivative-matrix ranks and decomposition counts for ternary forms";
  m.attr("__version__") = kVersion;

  m.def("perfect_case", [](int n, const std::vector<int>& degrees) -> py::object {
    const auto k = perfect_case(n, static_cast<int>(degrees.size()), degrees);
    return k ? py::cast(*k) : py::none();
  });
  m.def("generic_rank_uniform", &generic_rank_uniform, py::arg("n"), py::arg("r"),
        py::arg("degree"));
  m.def("defectivity_check", [](int n, int r, int a1, int s, int a2) {
    const DefectReport rep = defectivity_check(n, r, a1, s, a2);
    py::dict d;
    d["k"] = rep.k;
    d["kprime"] = rep.kprime;
    d["defective"] = rep.defective;
    return d;
  });

  m.def("monomial_count", [](int n, int d) { return monomials(n, d).size(); });
  m.def("monomial_exponents", [](int n, int d) { return monomials(n, d).exponents(); });

  m.def(
      "rank_preset_report",
      [](const std::string& name, std::uint64_t seed, double tol) {
        return rank_report_dict(rank_preset_report(name, seed, tol));
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("tol") = 1e-8);

  m.def(
      "rank",
      [](int n, const std::vector<int>& degrees, const std::vector<std::vector<Complex>>& forms,
         int order, double tol) {
        const PolyVector f = polyvector_from_lists(n, degrees, forms);
        const auto degs = f.degrees();
        const bool uniform =
            std::all_of(degs.begin(), degs.end(), [&](int d) { return d == degs.front(); });
        const CMat mat = uniform ? build_catalecticant(f, order)
                                 : build_catalecticant_mixed(f, order);
        return rank_report_dict(rank_report(mat, tol));
      },
      py::arg("n"), py::arg("degrees"), py::arg("forms"), py::arg("order"),
      py::arg("tol") = 1e-8);

  m.def(
      "count",
      [](const std::string& preset, std::uint64_t seed, int stable_loops, int max_loops,
         int threads) {
        const auto sys = make_count_preset(preset, seed);
        Rng rng(seed);
        const StartPair start = sys->make_start(rng);
        MonodromyConfig cfg;
        cfg.stable_loops = stable_loops;
        cfg.max_loops = max_loops;
        cfg.threads = threads;
        const MonodromyState st = run_monodromy(*sys, start, cfg, seed);
        py::dict d;
        d["classes"] = st.classes.size();
        d["stabilized"] = st.stabilized;
        d["loops_run"] = st.loops_run;
        d["paths_tracked"] = st.paths_tracked;
        d["path_failures"] = st.path_failures;
        return d;
      },
      py::arg("preset"), py::arg("seed") = 1, py::arg("stable_loops") = 8,
      py::arg("max_loops") = 100, py::arg("threads") = 1);

  m.def("count_preset_names", &count_preset_names);
}
