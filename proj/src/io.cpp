#include "catconf/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace catconf {

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const CVec& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_json(v[i]));
  return arr;
}

CVec cvec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of [re, im] pairs");
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
  return v;
}

Json to_json(const PolyVector& f) {
  Json forms = Json::array();
  for (const auto& form : f.forms) {
    Json coeffs = Json::array();
    for (const auto& c : form.coeffs) coeffs.push_back(to_json(c));
    forms.push_back(std::move(coeffs));
  }
  return Json{{"n", f.n}, {"degrees", f.degrees()}, {"forms", std::move(forms)}};
}

PolyVector polyvector_from_json(const Json& j) {
  PolyVector f;
  f.n = j.at("n").get<int>();
  const auto degrees = j.at("degrees").get<std::vector<int>>();
  const auto& forms = j.at("forms");
  if (!forms.is_array() || forms.size() != degrees.size())
    throw std::invalid_argument("polyvector: forms and degrees disagree");
  for (size_t i = 0; i < degrees.size(); ++i) {
    Poly p(f.n, degrees[i]);
    const auto& coeffs = forms[i];
    if (coeffs.size() != p.coeffs.size())
      throw std::invalid_argument("polyvector: coefficient count does not match degree");
    for (size_t c = 0; c < p.coeffs.size(); ++c) p.coeffs[c] = complex_from_json(coeffs[c]);
    f.forms.push_back(std::move(p));
  }
  return f;
}

Json to_json(const RankReport& rep) {
  return Json{{"shape", Json::array({rep.rows, rep.cols})},
              {"rank", rep.rank},
              {"sigma", rep.sigma},
              {"gap", rep.gap},
              {"memberships", rep.memberships}};
}

SolutionSet make_solution_set(const std::string& preset, std::uint64_t seed,
                              const ParameterizedSystem& sys, const MonodromyState& state) {
  SolutionSet s;
  s.preset = preset;
  s.seed = seed;
  s.base_point = state.base_point;
  for (const auto& cls : state.classes) {
    SolutionSet::Entry e;
    e.summands = sys.split_summands(cls.x);
    e.residual = cls.residual;
    e.is_real = cls.is_real;
    s.classes.push_back(std::move(e));
  }
  s.loops_run = state.loops_run;
  s.stabilized = state.stabilized;
  s.path_failures = state.path_failures;
  return s;
}

Json to_json(const SolutionSet& s) {
  Json classes = Json::array();
  for (const auto& e : s.classes) {
    Json summands = Json::array();
    for (const auto& block : e.summands) summands.push_back(to_json(block));
    classes.push_back(Json{{"summands", std::move(summands)},
                           {"residual", e.residual},
                           {"is_real", e.is_real}});
  }
  return Json{{"preset", s.preset},
              {"seed", s.seed},
              {"base_p", to_json(s.base_point)},
              {"classes", std::move(classes)},
              {"loops_run", s.loops_run},
              {"stabilized", s.stabilized},
              {"path_failures", s.path_failures}};
}

SolutionSet solution_set_from_json(const Json& j) {
  SolutionSet s;
  s.preset = j.at("preset").get<std::string>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.base_point = cvec_from_json(j.at("base_p"));
  for (const auto& cj : j.at("classes")) {
    SolutionSet::Entry e;
    for (const auto& block : cj.at("summands")) e.summands.push_back(cvec_from_json(block));
    e.residual = cj.at("residual").get<double>();
    e.is_real = cj.at("is_real").get<bool>();
    s.classes.push_back(std::move(e));
  }
  s.loops_run = j.at("loops_run").get<int>();
  s.stabilized = j.at("stabilized").get<bool>();
  s.path_failures = j.at("path_failures").get<int>();
  return s;
}

CVec x_from_summands(const std::vector<CVec>& summands) {
  Eigen::Index total = 0;
  for (const auto& b : summands) total += b.size();
  CVec x(total);
  Eigen::Index at = 0;
  for (const auto& b : summands) {
    x.segment(at, b.size()) = b;
    at += b.size();
  }
  return x;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace catconf
