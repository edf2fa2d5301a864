#pragma once

#include <vector>

#include "catconf/monomials.hpp"
#include "catconf/types.hpp"

namespace catconf {

// Dense homogeneous form in n+1 variables; coeffs follow monomials(n, degree).
struct Poly {
  int n = 2;
  int degree = 0;
  std::vector<Complex> coeffs;

  Poly() = default;
  Poly(int n_, int degree_);
};

// Vector of forms sharing the variable count (degrees may differ).
struct PolyVector {
  int n = 2;
  std::vector<Poly> forms;

  std::vector<int> degrees() const;
};

// One summand of a decomposition f_j = sum_i weights_i[j] * ell_i^{a_j},
// ell_i = x0 + point[0] x1 + ... + point[n-1] xn (leading coefficient fixed).
struct Summand {
  std::vector<Complex> point;    // length n
  std::vector<Complex> weights;  // length r
};

Complex eval(const Poly& p, const std::vector<Complex>& point);

// Formal partial derivative with true integer factors; degree drops by one.
Poly derivative(const Poly& p, int var);

// Unweighted Veronese: entry c is the c-th degree-d monomial evaluated at
// point (length n+1), in monomials(n, d) order.
CVec veronese(const std::vector<Complex>& point, int d);

// Coefficient vector of (lin[0] x0 + ... + lin[n] xn)^d, i.e. the
// multinomial-weighted counterpart of veronese.
CVec linear_power_coeffs(const std::vector<Complex>& lin, int d);

Poly linear_power(const std::vector<Complex>& lin, int d);

// f_j = sum_i weights_i[j] * ell_i^{degrees[j]}.
PolyVector waring_forward_eval(const std::vector<Summand>& summands, int n,
                               const std::vector<int>& degrees);

}  // namespace catconf
