#include "doctest.h"

#include "catconf/poly.hpp"
#include "catconf/rng.hpp"

using namespace catconf;

namespace {

std::vector<Complex> random_point(Rng& rng, int len) {
  std::vector<Complex> p(len);
  for (auto& c : p) c = rng.gaussian_complex();
  return p;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("power of a linear form evaluates as the power of its value") {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto lin = random_point(rng, 3);
    const auto pt = random_point(rng, 3);
    for (int d = 1; d <= 6; ++d) {
      const Poly p = linear_power(lin, d);
      Complex lv(0, 0);
      for (int v = 0; v < 3; ++v) lv += lin[v] * pt[v];
      const Complex direct = std::pow(lv, d);
      const Complex via = eval(p, pt);
      CHECK(std::abs(via - direct) <= 1e-12 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("frozen cubic expansion of x0 + 2 x1 + 3 x2") {
  const Poly p = linear_power({{1, 0}, {2, 0}, {3, 0}}, 3);
  const MonomialOrder ord = monomials(2, 3);
  REQUIRE(p.coeffs.size() == 10);
  CHECK(p.coeffs[ord.index_of({3, 0, 0})] == Complex(1, 0));
  CHECK(p.coeffs[ord.index_of({2, 1, 0})] == Complex(6, 0));    // 3 * 2
  CHECK(p.coeffs[ord.index_of({2, 0, 1})] == Complex(9, 0));    // 3 * 3
  CHECK(p.coeffs[ord.index_of({1, 1, 1})] == Complex(36, 0));   // 6 * 2 * 3
  CHECK(p.coeffs[ord.index_of({0, 3, 0})] == Complex(8, 0));    // 2^3
  CHECK(p.coeffs[ord.index_of({0, 0, 3})] == Complex(27, 0));   // 3^3
}

TEST_CASE("derivative of a power follows the chain rule") {
  Rng rng(11);
  const auto lin = random_point(rng, 3);
  for (int d = 2; d <= 5; ++d) {
    const Poly p = linear_power(lin, d);
    for (int var = 0; var <= 2; ++var) {
      const Poly dp = derivative(p, var);
      Poly expected = linear_power(lin, d - 1);
      for (auto& c : expected.coeffs) c *= static_cast<double>(d) * lin[var];
      REQUIRE(dp.coeffs.size() == expected.coeffs.size());
      for (size_t i = 0; i < dp.coeffs.size(); ++i)
        CHECK(std::abs(dp.coeffs[i] - expected.coeffs[i]) <=
              1e-12 * (1.0 + std::abs(expected.coeffs[i])));
    }
  }
}

TEST_CASE("eval and derivative are linear in the coefficients") {
  Rng rng(13);
  const MonomialOrder ord = monomials(2, 4);
  Poly p(2, 4), q(2, 4), combo(2, 4);
  const Complex alpha = rng.gaussian_complex();
  const Complex beta = rng.gaussian_complex();
  for (int i = 0; i < ord.size(); ++i) {
    p.coeffs[i] = rng.gaussian_complex();
    q.coeffs[i] = rng.gaussian_complex();
    combo.coeffs[i] = alpha * p.coeffs[i] + beta * q.coeffs[i];
  }
  const auto pt = random_point(rng, 3);
  const Complex lhs = eval(combo, pt);
  const Complex rhs = alpha * eval(p, pt) + beta * eval(q, pt);
  CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));

  const Poly dc = derivative(combo, 1);
  const Poly dp = derivative(p, 1);
  const Poly dq = derivative(q, 1);
  for (size_t i = 0; i < dc.coeffs.size(); ++i) {
    const Complex want = alpha * dp.coeffs[i] + beta * dq.coeffs[i];
    CHECK(std::abs(dc.coeffs[i] - want) <= 1e-12 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("veronese entries match monomial evaluation") {
  Rng rng(17);
  const auto pt = random_point(rng, 3);
  for (int d = 1; d <= 5; ++d) {
    const CVec v = veronese(pt, d);
    const MonomialOrder ord = monomials(2, d);
    REQUIRE(v.size() == ord.size());
    for (int i = 0; i < ord.size(); ++i) {
      Poly mono(2, d);
      mono.coeffs[i] = Complex(1, 0);
      CHECK(std::abs(v[i] - eval(mono, pt)) <= 1e-12 * (1.0 + std::abs(v[i])));
    }
  }
}

TEST_CASE("degree-one veronese is the point itself") {
  const CVec v = veronese({{1, 0}, {2, -1}, {0, 3}}, 1);
  CHECK(v[0] == Complex(1, 0));
  CHECK(v[1] == Complex(2, -1));
  CHECK(v[2] == Complex(0, 3));
}

TEST_CASE("forward evaluation matches the sum of powers pointwise") {
  Rng rng(19);
  const std::vector<int> degrees = {3, 2};
  std::vector<Summand> summands(3);
  for (auto& s : summands) {
    s.point = random_point(rng, 2);
    s.weights = random_point(rng, 2);
  }
  const PolyVector f = waring_forward_eval(summands, 2, degrees);
  REQUIRE(f.forms.size() == 2);
  CHECK(f.degrees() == degrees);
  const auto pt = random_point(rng, 3);
  for (size_t j = 0; j < degrees.size(); ++j) {
    Complex want(0, 0);
    for (const auto& s : summands) {
      const Complex lv = pt[0] + s.point[0] * pt[1] + s.point[1] * pt[2];
      want += s.weights[j] * std::pow(lv, degrees[j]);
    }
    const Complex got = eval(f.forms[j], pt);
    CHECK(std::abs(got - want) <= 1e-11 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("single summand gives a scaled power") {
  Summand s;
  s.point = {{2, 1}, {-1, 0.5}};
  s.weights = {{0, 2}};
  const PolyVector f = waring_forward_eval({s}, 2, {4});
  const CVec powc = linear_power_coeffs({{1, 0}, s.point[0], s.point[1]}, 4);
  for (int i = 0; i < powc.size(); ++i)
    CHECK(std::abs(f.forms[0].coeffs[i] - s.weights[0] * powc[i]) <= 1e-13);
}

TEST_CASE("shape errors") {
  Summand s;
  s.point = {{1, 0}};
  s.weights = {{1, 0}};
  CHECK_THROWS_AS(waring_forward_eval({s}, 2, {3}), std::invalid_argument);
  Poly p(2, 2);
  CHECK_THROWS_AS(eval(p, {{1, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(derivative(p, 5), std::invalid_argument);
}

}  // TEST_SUITE
