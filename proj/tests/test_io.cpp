#include "doctest.h"

#include <cstdio>

#include "catconf/io.hpp"
#include "catconf/rng.hpp"

using namespace catconf;

TEST_SUITE("io") {

TEST_CASE("complex round trip preserves every bit") {
  const Complex z(0.1 + 0.2, -1.0 / 3.0);
  const Json j = to_json(z);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  const Complex back = complex_from_json(j);
  CHECK(back.real() == z.real());
  CHECK(back.imag() == z.imag());
}

TEST_CASE("vector round trip through a serialized string") {
  Rng rng(501);
  const CVec v = rng.gaussian_cvec(17);
  const Json j = Json::parse(to_json(v).dump());
  const CVec back = cvec_from_json(j);
  REQUIRE(back.size() == v.size());
  for (int i = 0; i < v.size(); ++i) {
    CHECK(back[i].real() == v[i].real());
    CHECK(back[i].imag() == v[i].imag());
  }
}

TEST_CASE("polynomial vector round trip") {
  Rng rng(503);
  std::vector<Summand> summands(3);
  for (auto& s : summands) {
    s.point = {rng.gaussian_complex(), rng.gaussian_complex()};
    s.weights = {rng.gaussian_complex(), rng.gaussian_complex()};
  }
  const PolyVector f = waring_forward_eval(summands, 2, {3, 2});
  const Json j = Json::parse(to_json(f).dump());
  const PolyVector back = polyvector_from_json(j);
  CHECK(back.n == 2);
  REQUIRE(back.forms.size() == 2);
  CHECK(back.degrees() == std::vector<int>{3, 2});
  for (size_t k = 0; k < back.forms.size(); ++k)
    for (size_t c = 0; c < back.forms[k].coeffs.size(); ++c)
      CHECK(back.forms[k].coeffs[c] == f.forms[k].coeffs[c]);
}

TEST_CASE("malformed polynomial payloads are rejected") {
  CHECK_THROWS(polyvector_from_json(Json::parse(R"({"n": 2})")));
  CHECK_THROWS(polyvector_from_json(Json::parse(R"({"n": 2, "degrees": [3], "forms": [[[1]]]})")));
}

TEST_CASE("rank report serialization carries the full diagnosis") {
  Rng rng(507);
  CMat m(4, 3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rng.gaussian_complex();
  const RankReport rep = rank_report(m, 1e-8);
  const Json j = to_json(rep);
  CHECK(j["shape"][0] == 4);
  CHECK(j["shape"][1] == 3);
  CHECK(j["rank"] == rep.rank);
  CHECK(j["sigma"].size() == rep.sigma.size());
  CHECK(j["gap"].get<double>() == rep.gap);
  CHECK(j["memberships"].empty());
}

TEST_CASE("solution set round trip preserves classes and metadata") {
  const auto sys = build_slice_system(SliceKind::kSegre6, 53);
  Rng rng(509);
  const StartPair sp = sys->make_start(rng);
  MonodromyState st;
  st.base_point = sp.path_point;
  st.loops_run = 4;
  st.stabilized = true;
  st.path_failures = 1;
  SolutionClass c;
  c.x = sp.x;
  c.residual = 2.5e-13;
  c.is_real = false;
  st.classes.push_back(c);

  const SolutionSet set = make_solution_set("segre-slice-6", 53, *sys, st);
  const Json j = Json::parse(to_json(set).dump());
  const SolutionSet back = solution_set_from_json(j);

  CHECK(back.preset == "segre-slice-6");
  CHECK(back.seed == 53);
  CHECK(back.loops_run == 4);
  CHECK(back.stabilized);
  CHECK(back.path_failures == 1);
  REQUIRE(back.classes.size() == 1);
  CHECK(back.classes[0].residual == 2.5e-13);
  CHECK_FALSE(back.classes[0].is_real);
  const CVec x = x_from_summands(back.classes[0].summands);
  REQUIRE(x.size() == sp.x.size());
  for (int i = 0; i < x.size(); ++i) {
    CHECK(x[i].real() == sp.x[i].real());
    CHECK(x[i].imag() == sp.x[i].imag());
  }
  for (int i = 0; i < back.base_point.size(); ++i) {
    CHECK(back.base_point[i].real() == sp.path_point[i].real());
    CHECK(back.base_point[i].imag() == sp.path_point[i].imag());
  }
}

TEST_CASE("summand splitting respects the system block structure") {
  const auto sys = build_reduced_quartic_system();
  Rng rng(511);
  const CVec x = rng.gaussian_cvec(40);
  const auto split = sys->split_summands(x);
  REQUIRE(split.size() == 10);
  const CVec joined = x_from_summands(split);
  for (int i = 0; i < 40; ++i) CHECK(joined[i] == x[i]);
}

TEST_CASE("text files round trip") {
  const std::string path = "io_test_scratch.json";
  const std::string payload = "{\"a\": [1.5, -2.25]}\n";
  write_text_file(path, payload);
  CHECK(read_text_file(path) == payload);
  std::remove(path.c_str());
  CHECK_THROWS(read_text_file(path));
}

}  // TEST_SUITE
