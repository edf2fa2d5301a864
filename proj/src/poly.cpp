#include "catconf/poly.hpp"

#include <stdexcept>

namespace catconf {

namespace {

// pow_table[v][k] = point[v]^k for k = 0..d.
std::vector<std::vector<Complex>> pow_table(const std::vector<Complex>& point, int d) {
  std::vector<std::vector<Complex>> t(point.size());
  for (size_t v = 0; v < point.size(); ++v) {
    t[v].resize(d + 1);
    t[v][0] = Complex(1.0, 0.0);
    for (int k = 1; k <= d; ++k) t[v][k] = t[v][k - 1] * point[v];
  }
  return t;
}

}  // namespace

Poly::Poly(int n_, int degree_) : n(n_), degree(degree_) {
  coeffs.assign(static_cast<size_t>(binomial(degree + n, n)), Complex(0.0, 0.0));
}

std::vector<int> PolyVector::degrees() const {
  std::vector<int> d;
  d.reserve(forms.size());
  for (const auto& f : forms) d.push_back(f.degree);
  return d;
}

Complex eval(const Poly& p, const std::vector<Complex>& point) {
  if (static_cast<int>(point.size()) != p.n + 1)
    throw std::invalid_argument("eval: point has wrong length");
  const MonomialOrder ord = monomials(p.n, p.degree);
  const auto pows = pow_table(point, p.degree);
  Complex acc(0.0, 0.0);
  for (int i = 0; i < ord.size(); ++i) {
    Complex term = p.coeffs[i];
    const Exponent& e = ord.exponent(i);
    for (int v = 0; v <= p.n; ++v)
      if (e[v] != 0) term *= pows[v][e[v]];
    acc += term;
  }
  return acc;
}

Poly derivative(const Poly& p, int var) {
  if (var < 0 || var > p.n) throw std::invalid_argument("derivative: variable out of range");
  if (p.degree == 0) {
    Poly zero(p.n, 0);
    return zero;
  }
  Poly out(p.n, p.degree - 1);
  const MonomialOrder src = monomials(p.n, p.degree);
  const MonomialOrder dst = monomials(p.n, p.degree - 1);
  for (int i = 0; i < src.size(); ++i) {
    Exponent e = src.exponent(i);
    if (e[var] == 0) continue;
    const int factor = e[var];
    e[var] -= 1;
    out.coeffs[dst.index_of(e)] += static_cast<double>(factor) * p.coeffs[i];
  }
  return out;
}

CVec veronese(const std::vector<Complex>& point, int d) {
  const int n = static_cast<int>(point.size()) - 1;
  if (n < 1) throw std::invalid_argument("veronese: point needs at least 2 coordinates");
  const MonomialOrder ord = monomials(n, d);
  const auto pows = pow_table(point, d);
  CVec v(ord.size());
  for (int i = 0; i < ord.size(); ++i) {
    Complex term(1.0, 0.0);
    const Exponent& e = ord.exponent(i);
    for (int var = 0; var <= n; ++var)
      if (e[var] != 0) term *= pows[var][e[var]];
    v[i] = term;
  }
  return v;
}

CVec linear_power_coeffs(const std::vector<Complex>& lin, int d) {
  const int n = static_cast<int>(lin.size()) - 1;
  const MonomialOrder ord = monomials(n, d);
  const auto pows = pow_table(lin, d);
  CVec v(ord.size());
  for (int i = 0; i < ord.size(); ++i) {
    const Exponent& e = ord.exponent(i);
    Complex term(static_cast<double>(multinomial(d, e)), 0.0);
    for (int var = 0; var <= n; ++var)
      if (e[var] != 0) term *= pows[var][e[var]];
    v[i] = term;
  }
  return v;
}

Poly linear_power(const std::vector<Complex>& lin, int d) {
  Poly p(static_cast<int>(lin.size()) - 1, d);
  const CVec c = linear_power_coeffs(lin, d);
  for (int i = 0; i < c.size(); ++i) p.coeffs[i] = c[i];
  return p;
}

PolyVector waring_forward_eval(const std::vector<Summand>& summands, int n,
                               const std::vector<int>& degrees) {
  const int r = static_cast<int>(degrees.size());
  for (const auto& s : summands) {
    if (static_cast<int>(s.point.size()) != n)
      throw std::invalid_argument("waring_forward_eval: summand point has wrong length");
    if (static_cast<int>(s.weights.size()) != r)
      throw std::invalid_argument("waring_forward_eval: summand weights have wrong length");
  }
  PolyVector f;
  f.n = n;
  f.forms.reserve(r);
  for (int j = 0; j < r; ++j) {
    Poly form(n, degrees[j]);
    for (const auto& s : summands) {
      std::vector<Complex> lin(n + 1);
      lin[0] = Complex(1.0, 0.0);
      for (int v = 0; v < n; ++v) lin[v + 1] = s.point[v];
      const CVec c = linear_power_coeffs(lin, degrees[j]);
      for (int i = 0; i < c.size(); ++i) form.coeffs[i] += s.weights[j] * c[i];
    }
    f.forms.push_back(std::move(form));
  }
  return f;
}

}  // namespace catconf
