#pragma once

#include <cstdint>
#include <vector>

#include "catconf/types.hpp"

namespace catconf {

// Exponent tuple (e_0, ..., e_n) of a degree-d monomial in n+1 variables.
using Exponent = std::vector<int>;

// All degree-d monomials in n+1 variables, ordered by descending
// lexicographic comparison of exponent tuples:
//   (d,0,...,0) first, (0,...,0,d) last.
// For n=2, d=2 this reads x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
class MonomialOrder {
 public:
  MonomialOrder(int n, int d);

  int n() const { return n_; }
  int degree() const { return d_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  const Exponent& exponent(int i) const { return exponents_[i]; }
  const std::vector<Exponent>& exponents() const { return exponents_; }

  // Index of an exponent tuple; throws std::out_of_range if not degree d.
  int index_of(const Exponent& e) const;

 private:
  int n_;
  int d_;
  std::vector<Exponent> exponents_;
};

MonomialOrder monomials(int n, int d);

// Exact binomial(n, k) in 64-bit arithmetic; throws std::overflow_error
// if an intermediate product would overflow.
std::int64_t binomial(int n, int k);

// d! / (e_0! ... e_n!) for an exponent tuple summing to d.
std::int64_t multinomial(int d, const Exponent& e);

}  // namespace catconf
